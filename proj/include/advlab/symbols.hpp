#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace advlab {

/// One input cell: a base symbol and whether an inkdot sits on it.
struct DottedSymbol {
    char base = '0';
    bool marked = false;

    auto operator<=>(const DottedSymbol &) const = default;
};

/// Cells are addressed 1-indexed by every public operation; storage is 0-based.
using DottedWord = std::vector<DottedSymbol>;

/// UTF-8 COMBINING DOT ABOVE, written after a marked base in text form.
inline constexpr std::string_view kDotMark = "\xCC\x87";

DottedWord undotted(std::string_view plain);

/// Parses the text form: each base is one ASCII character, optionally
/// followed by kDotMark. Throws ParseError on anything else.
DottedWord parse_dotted(std::string_view text);

std::string to_text(const DottedWord &word);
std::string to_text(DottedSymbol symbol);

/// The plain string underneath a dotted word.
std::string bases_of(const DottedWord &word);

} // namespace advlab
