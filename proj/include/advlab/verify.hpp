#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advlab/constructions.hpp"
#include "advlab/dfa.hpp"
#include "advlab/languages.hpp"
#include "advlab/rational.hpp"

namespace advlab {

inline constexpr std::uint64_t kDefaultCeiling = 100'000'000;

struct Counterexample {
    std::string word;
    std::string advice;
    Probability machine_accepts;
    bool oracle_member = false;
};

struct RecognitionReport {
    std::size_t max_len = 0;
    bool agree = true;
    std::optional<Counterexample> counterexample;
    std::uint64_t strings_checked = 0;
};

/// Compares the advised machine with the oracle on every word of length
/// 1..max_len. Randomized advice agrees on a word when the correct verdict
/// has probability at least 2/3. Throws PreconditionError when the oracle
/// alphabet is not part of the machine's input alphabet.
RecognitionReport check_recognition(const AdvisedMachine &am, const LanguageOracle &oracle,
                                    std::size_t max_len);

/// Exact acceptance probability of `machine` on `word` under the advice
/// distribution for |word|. Throws AdviceMismatchError when that
/// distribution does not validate.
Probability acceptance_probability(const Dfa &machine, const RandomizedInkdotAdvice &advice,
                                   std::string_view word);

/// Largest error probability over all words of length 1..max_len.
Probability max_error(const AdvisedMachine &am, const LanguageOracle &oracle,
                      std::size_t max_len);

/// Every DFA with `states` states, start state 0, over the given bases
/// (both variants of each when `dotted`). Index order: transition table as a
/// mixed-radix number (first cell least significant), then accepting set.
class DfaEnumerator {
public:
    DfaEnumerator(std::size_t states, std::string bases, bool dotted,
                  std::uint64_t ceiling = kDefaultCeiling);

    /// states^(states * |alphabet|) * 2^states.
    std::uint64_t size() const noexcept { return size_; }
    Dfa at(std::uint64_t index) const;
    const std::vector<DottedSymbol> &alphabet() const noexcept { return alphabet_; }

private:
    std::size_t states_;
    std::vector<DottedSymbol> alphabet_;
    std::uint64_t tables_ = 0;
    std::uint64_t size_ = 0;
};

struct SeparationCertificate {
    std::string oracle;
    std::size_t q = 0;
    std::size_t b = 0;
    std::size_t max_len = 0;
    bool witness_found = false;
    std::optional<Dfa> witness;
    /// Winning pattern per length 1..max_len when a witness exists.
    std::vector<InkdotPattern> witness_advice;
    std::uint64_t machines_searched = 0;
    /// Closed-form sizes: machine space and patterns with <= b dots per length.
    std::uint64_t machine_space = 0;
    std::vector<std::uint64_t> patterns_per_length;
    /// Nominal (machine, length, pattern, word) tuples.
    std::uint64_t tuple_space = 0;
};

/// Nominal tuple count of a separation search, saturating at UINT64_MAX.
std::uint64_t separation_search_size(std::size_t alphabet_size, std::size_t q, std::size_t b,
                                     std::size_t max_len);

/// Is there a q-state DFA that, for every length 1..max_len, decides the
/// oracle exactly with some pattern of at most b inkdots? Machines are
/// searched in enumeration order and the first witness wins, independent of
/// `jobs`. Throws SearchRefused when the tuple space exceeds `ceiling`.
SeparationCertificate search_separation(const LanguageOracle &oracle, std::size_t q,
                                        std::size_t b, std::size_t max_len,
                                        std::uint64_t ceiling = kDefaultCeiling,
                                        unsigned jobs = 1);

/// Classes of the words of length `word_len` under "xz in L <=> yz in L for
/// every |z| <= ext_len". Throws SearchRefused above the ceiling.
std::uint64_t myhill_nerode_index(const LanguageOracle &oracle, std::size_t word_len,
                                  std::size_t ext_len, std::uint64_t ceiling = kDefaultCeiling);

struct ClassGroup {
    std::size_t n = 0;
    std::size_t prefix_len = 0;
    std::uint64_t classes = 0;
};

struct EquivalenceClassReport {
    std::size_t max_len = 0;
    std::vector<ClassGroup> groups;
    std::uint64_t max_group_count = 0;
};

/// For each n <= max_len and prefix length l <= n, the number of classes of
/// words of length l under "xz in S <=> yz in S for every z with |xz| = n".
/// max_group_count is a lower bound on the total number of classes.
EquivalenceClassReport fact1_class_count(const LanguageOracle &oracle, std::size_t max_len,
                                         std::uint64_t ceiling = kDefaultCeiling);

} // namespace advlab
