#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "advlab/dfa.hpp"
#include "advlab/rational.hpp"
#include "advlab/symbols.hpp"
#include "advlab/track.hpp"

namespace advlab {

/// Set of marked positions on an input of length n.
/// Positions are 1-indexed, strictly increasing and at most n.
class InkdotPattern {
public:
    InkdotPattern() = default;
    /// Sorts nothing: throws AdviceMismatchError unless `positions` is
    /// strictly increasing inside [1, n].
    InkdotPattern(std::size_t n, std::vector<std::size_t> positions);

    static InkdotPattern empty(std::size_t n) { return InkdotPattern(n, {}); }

    std::size_t length() const noexcept { return n_; }
    const std::vector<std::size_t> &positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    bool marks(std::size_t position) const;

    bool operator==(const InkdotPattern &) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> positions_;
};

std::string to_string(const InkdotPattern &pattern);

/// Marks cell i iff i is in the pattern. Throws AdviceMismatchError when
/// |word| differs from pattern.length().
DottedWord apply_inkdots(std::string_view word, const InkdotPattern &pattern);

/// '1' on marked positions, '0' elsewhere.
std::string pattern_to_track(const InkdotPattern &pattern);

/// Inverse of pattern_to_track. Throws InputDomainError on a non-binary symbol.
InkdotPattern track_to_pattern(std::string_view bits);

/// Complement of the marked set inside [1, n].
InkdotPattern flip_pattern(const InkdotPattern &pattern);

/// Swaps the roles of marked and unmarked symbols in the transition table.
/// Throws PreconditionError unless every base has both variants.
Dfa flip_machine(const Dfa &machine);

/// Binary advice track <-> inkdots: a track machine with t = 2 and the
/// dotted-alphabet machine that reads '1' on the track as an inkdot.
Dfa track_to_dotted(const TrackDfa &machine);
TrackDfa dotted_to_track(const Dfa &machine);

// Advice functions. Each depends only on the input length.

class PrefixAdvice {
public:
    using Fn = std::function<std::string(std::size_t)>;

    /// `length` is the fixed advice length k; every advice string is checked
    /// against it for n <= kConstructionCheckBound.
    PrefixAdvice(std::size_t length, Fn fn);

    std::size_t length() const noexcept { return k_; }
    /// Throws AdviceMismatchError when the string is not k bits over {0,1}.
    std::string operator()(std::size_t n) const;

private:
    std::size_t k_;
    Fn fn_;
};

class TrackAdvice {
public:
    using Fn = std::function<std::string(std::size_t)>;

    TrackAdvice(unsigned alphabet_size, Fn fn);

    unsigned alphabet_size() const noexcept { return t_; }
    /// Throws AdviceMismatchError unless the result has length n over '0'..'0'+t-1.
    std::string operator()(std::size_t n) const;

private:
    unsigned t_;
    Fn fn_;
};

class InkdotAdvice {
public:
    using BudgetFn = std::function<std::size_t(std::size_t)>;
    using PatternFn = std::function<InkdotPattern(std::size_t)>;

    /// Checks every length up to kConstructionCheckBound: the pattern must
    /// have length n, fit the budget, and the budget may not exceed n.
    InkdotAdvice(BudgetFn budget, PatternFn pattern);

    std::size_t budget(std::size_t n) const { return budget_(n); }
    InkdotPattern operator()(std::size_t n) const;

private:
    BudgetFn budget_;
    PatternFn pattern_;
};

struct WeightedPattern {
    std::vector<std::size_t> positions;
    Probability p;

    bool operator==(const WeightedPattern &) const = default;
};

using PatternDistribution = std::vector<WeightedPattern>;

class RandomizedInkdotAdvice {
public:
    using BudgetFn = std::function<std::size_t(std::size_t)>;
    using DistributionFn = std::function<PatternDistribution(std::size_t)>;

    /// Rejects (AdviceMismatchError) any distribution that fails
    /// validate_randomized for n <= kConstructionCheckBound.
    RandomizedInkdotAdvice(BudgetFn budget, DistributionFn distribution);

    /// Skips construction-time validation; used to exercise the validator.
    static RandomizedInkdotAdvice unchecked(BudgetFn budget, DistributionFn distribution);

    std::size_t budget(std::size_t n) const { return budget_(n); }
    PatternDistribution operator()(std::size_t n) const { return distribution_(n); }

private:
    RandomizedInkdotAdvice() = default;
    BudgetFn budget_;
    DistributionFn distribution_;
};

using AdviceScheme = std::variant<PrefixAdvice, TrackAdvice, InkdotAdvice, RandomizedInkdotAdvice>;

inline constexpr std::size_t kConstructionCheckBound = 64;

/// Lists every problem with the distribution at length n: probabilities
/// outside [0,1], a sum other than 1, malformed or out-of-range positions,
/// and patterns over budget. Never throws.
std::vector<std::string> validate_randomized(const RandomizedInkdotAdvice &advice, std::size_t n);

/// Point mass on the deterministic pattern.
RandomizedInkdotAdvice as_randomized(const InkdotAdvice &advice);

} // namespace advlab
