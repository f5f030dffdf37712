#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "advlab/advice.hpp"
#include "advlab/dfa.hpp"
#include "advlab/languages.hpp"
#include "advlab/rational.hpp"
#include "advlab/tm.hpp"
#include "advlab/track.hpp"

namespace advlab {

using Machine = std::variant<Dfa, OneWayTm, TrackDfa>;

/// A machine together with the advice that makes it recognize `oracle`.
struct AdvisedMachine {
    std::string name;
    Machine machine;
    AdviceScheme advice;
    /// Registry name of the language the pair is meant to recognize.
    std::string oracle;
};

std::size_t state_count(const Machine &machine);

/// Bases the machine reads from its input (excluding prefix-only symbols).
std::string input_alphabet(const Machine &machine);

/// Acceptance probability for words of one fixed length; the advice for
/// that length is computed once when the evaluator is bound.
using WordEvaluator = std::function<Probability(std::string_view)>;
WordEvaluator bind_length(const AdvisedMachine &am, std::size_t n);

/// Probability that the advised machine accepts `word`. Deterministic advice
/// yields 0 or 1. A TM that exhausts its step budget counts as rejecting.
Probability acceptance_probability(const AdvisedMachine &am, std::string_view word);

/// Deterministic verdict; throws PreconditionError for randomized advice.
bool accepts(const AdvisedMachine &am, std::string_view word);

/// Simulates k bits of prefix advice with one inkdot. Inputs shorter than
/// 2^k are decided from a lookup table; longer ones carry a dot on position
/// b+1, where b is the prefix read as a k-bit number, and the machine runs
/// 2^k copies of `machine` until the dot picks one. If no dot shows up by
/// position 2^k the input is rejected. k = 0 returns `machine` reading both
/// variants identically, with empty advice.
/// Throws PreconditionError for k > 3 or a machine without bases 0 and 1,
/// AdviceMismatchError when advice strings are not k bits long.
AdvisedMachine prefix_to_inkdot(const Dfa &machine, std::size_t k, const PrefixAdvice &advice);

inline constexpr std::size_t kMaxPrefixBits = 3;

/// Border-point checker for the alternating-segments language, with
/// segments_advice. 2(m+1)+2 states.
AdvisedMachine segments_recognizer(unsigned m);

/// Accepts iff every marked cell holds 1 and every unmarked cell holds 0.
AdvisedMachine spaced_ones_recognizer(const GrowthFunction &f);

/// The (k+3)-state prefix-advised machine for the residue-bit language.
AdvisedMachine residue_prefix_machine(unsigned k);

/// Two states: reject iff a dotted 0 is seen.
Dfa dot_on_one_checker();

/// dot_on_one_checker with residue_bit_inkdot_advice(k).
AdvisedMachine residue_inkdot_machine(unsigned k);

/// Four-segment language (m = 3) with two randomly placed border dots.
AdvisedMachine randomized_four_segments();

/// The bare machine behind drift_tm; its work use is bit_width(floor(g(n))) cells.
OneWayTm build_drift_machine();

/// One-way TM with one inkdot and O(log g(n)) work cells for the drift language.
AdvisedMachine drift_tm(const GrowthFunction &g);

/// Track-advised equality checker over a k-ary alphabet, advice = the member.
/// Three states, so the empty word is rejected.
AdvisedMachine seeded_track_recognizer(const BinarySeed &seed, unsigned k, std::string oracle);

/// Recovers the seed prefix from a track-advised recognizer of the seeded
/// language: for each length i, the first k-ary string (lexicographic) the
/// machine accepts under advice[i-1], translated to floor(log2 k^i) bits.
/// Throws DecodeFailure(i) when nothing of length i is accepted. With
/// `check_unique` (the default in debug builds) the whole length is scanned
/// and a second accepted string raises PreconditionError.
#ifdef NDEBUG
inline constexpr bool kCheckUniqueByDefault = false;
#else
inline constexpr bool kCheckUniqueByDefault = true;
#endif
std::string decompress(const TrackDfa &machine, std::span<const std::string> advice, unsigned k,
                       bool check_unique = kCheckUniqueByDefault);

/// Registry: "Lm:3", "Lf:sqrt", "LANGk-prefix:2", "LANGk-dot:2", "L3rand", "Lg:log2",
/// "Lw:k=3,seed=42". Throws UnknownNameError.
AdvisedMachine build_by_name(std::string_view name, std::uint64_t default_seed = 42);

/// Canonical builder for an oracle registry name (e.g. "LANGk:3" -> "LANGk-dot:3").
std::string default_builder_for(std::string_view oracle_name);

} // namespace advlab
