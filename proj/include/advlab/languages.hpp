#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "advlab/advice.hpp"

namespace advlab {

/// A length-indexed quantity such as the number of inkdots or subword length.
struct GrowthFunction {
    std::string name;
    std::function<std::uint64_t(std::uint64_t)> eval;
    bool is_omega_1 = true;
    bool is_o_n = true;

    std::uint64_t operator()(std::uint64_t n) const { return eval(n); }
};

/// ceil(sqrt(n)).
GrowthFunction growth_sqrt();
/// max(1, ceil(log2 n)).
GrowthFunction growth_log2();
/// ceil(log2 log2 (n + 3)).
GrowthFunction growth_loglog();
/// "sqrt", "log2" or "loglog". Throws UnknownNameError.
GrowthFunction growth_by_name(std::string_view name);

/// Reproducible infinite bit sequence. Bits are addressed 1-indexed.
class BinarySeed {
public:
    /// Counter-mode SplitMix64: bit i is bit (i-1) % 64 of splitmix64(seed, (i-1) / 64).
    static BinarySeed splitmix(std::uint64_t seed);
    /// The given bits, then zeros forever. Throws ParseError on non-binary input.
    static BinarySeed from_bits(std::string bits);

    int bit(std::size_t index) const;
    std::string bits(std::size_t first, std::size_t count) const;

private:
    bool explicit_ = false;
    std::uint64_t seed_ = 0;
    std::string prefix_;
};

/// Membership predicate plus a per-length member generator.
struct LanguageOracle {
    std::string name;
    std::string alphabet;
    std::function<bool(std::string_view)> member;
    std::function<std::vector<std::string>(std::size_t)> members_of_length;
};

// Alternating equal-length segments: m+1 runs of 0s and 1s, starting with 0.

bool segments_member(unsigned m, std::string_view w);
/// Border points n/(m+1)+1, 2n/(m+1)+1, ...; empty unless (m+1) | n and n > 0.
InkdotPattern segments_advice(unsigned m, std::size_t n);
LanguageOracle segments_oracle(unsigned m);

// Evenly spaced ones: 1 exactly at multiples of the gap ceil(n / f(n)).

std::uint64_t spaced_ones_gap(const GrowthFunction &f, std::size_t n);
bool spaced_ones_member(const GrowthFunction &f, std::string_view w);
InkdotPattern spaced_ones_advice(const GrowthFunction &f, std::size_t n);
LanguageOracle spaced_ones_oracle(const GrowthFunction &f);

// Residue bit: |w| < k, or w[i+1] == 1 with i = |w| mod k.

bool residue_bit_member(unsigned k, std::string_view w);
std::string residue_bit_prefix_advice(unsigned k, std::size_t n);
InkdotPattern residue_bit_inkdot_advice(unsigned k, std::size_t n);
LanguageOracle residue_bit_oracle(unsigned k);

// Drifting subwords over {0,1,#}: s1#s2#...#sm#+ with |si| = floor(g(n)),
// each si in 0*10*, and the 1 moving by at most one cell between subwords.

bool drift_member(const GrowthFunction &g, std::string_view w);
/// One inkdot on position floor(g(n)) when that fits in the input.
InkdotPattern drift_advice(const GrowthFunction &g, std::size_t n);
LanguageOracle drift_oracle(const GrowthFunction &g);

// Seeded language with one k-ary member per length.

/// floor(log2(k^i)), computed exactly for any i.
std::size_t seeded_chunk_length(unsigned k, std::size_t i);
/// 1-indexed offset of chunk i in the seed.
std::size_t seeded_chunk_offset(unsigned k, std::size_t i);
std::string seeded_member(const BinarySeed &seed, unsigned k, std::size_t i);
/// Base-k word rendered in binary, left-padded to `length` bits. Throws
/// OverflowError when more bits are needed, InputDomainError on a bad digit.
std::string translate_to_binary(std::string_view word, unsigned k, std::size_t length);
LanguageOracle seeded_oracle(const BinarySeed &seed, unsigned k, std::string name);

/// Every string over `alphabet`.
LanguageOracle universal_oracle(std::string alphabet);

/// Parameters of a "Lw:k=3,seed=42" name; missing ones take k = 3 and
/// `default_seed`. Throws UnknownNameError.
struct SeededParams {
    unsigned k = 3;
    std::uint64_t seed = 42;
};
SeededParams parse_seeded_name(std::string_view name, std::uint64_t default_seed);

/// Registry: "Lm:2", "L3", "Lf:sqrt", "LANGk:3", "Lg:log2",
/// "Lw:k=3,seed=42" (seed defaults to `default_seed`), "all:01".
LanguageOracle oracle_by_name(std::string_view name, std::uint64_t default_seed = 42);

/// Calls `visit` for every word of length n over `alphabet`, in
/// lexicographic order of alphabet positions.
void for_each_word(std::string_view alphabet, std::size_t n,
                   const std::function<void(const std::string &)> &visit);

/// Same order; stops as soon as `visit` returns false. Returns false if stopped.
bool for_each_word_until(std::string_view alphabet, std::size_t n,
                         const std::function<bool(const std::string &)> &visit);

} // namespace advlab
