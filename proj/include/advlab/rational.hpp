#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace advlab {

/// Exact probability. Every probability in the library flows through this type.
/// Compare against Probability values, never raw integers: boost's mixed
/// rational/integer operator== recurses forever under C++20 rewrite rules.
using Probability = boost::rational<std::int64_t>;

/// "a/b" in lowest terms; integers render without a denominator ("1", "0").
std::string to_string(const Probability &p);

/// Accepts "a/b" or "a". Throws ParseError.
Probability parse_probability(std::string_view text);

} // namespace advlab
