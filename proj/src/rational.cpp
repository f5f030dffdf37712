#include "advlab/rational.hpp"

#include <charconv>

#include "advlab/error.hpp"

namespace advlab {

std::string to_string(const Probability &p) {
    if (p.denominator() == 1)
        return std::to_string(p.numerator());
    return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty())
        throw ParseError("probability: cannot parse '" + std::string(whole) + "'");
    return v;
}

} // namespace

Probability parse_probability(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Probability(parse_int(text, text));
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0)
        throw ParseError("probability: zero denominator in '" + std::string(text) + "'");
    return Probability(num, den);
}

} // namespace advlab
