#include "advlab/symbols.hpp"

#include "advlab/error.hpp"

namespace advlab {

DottedWord undotted(std::string_view plain) {
    DottedWord out;
    out.reserve(plain.size());
    for (char c : plain)
        out.push_back({c, false});
    return out;
}

DottedWord parse_dotted(std::string_view text) {
    DottedWord out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c >= 0x80)
            throw ParseError("dotted word: base symbols must be ASCII (byte " +
                             std::to_string(i) + ")");
        DottedSymbol s{text[i], false};
        ++i;
        if (text.substr(i, kDotMark.size()) == kDotMark) {
            s.marked = true;
            i += kDotMark.size();
        }
        out.push_back(s);
    }
    return out;
}

std::string to_text(DottedSymbol symbol) {
    std::string out(1, symbol.base);
    if (symbol.marked)
        out += kDotMark;
    return out;
}

std::string to_text(const DottedWord &word) {
    std::string out;
    for (const auto &s : word)
        out += to_text(s);
    return out;
}

std::string bases_of(const DottedWord &word) {
    std::string out;
    out.reserve(word.size());
    for (const auto &s : word)
        out.push_back(s.base);
    return out;
}

} // namespace advlab
