#include "advlab/advice.hpp"

#include <algorithm>

#include "advlab/error.hpp"

namespace advlab {

InkdotPattern::InkdotPattern(std::size_t n, std::vector<std::size_t> positions)
    : n_(n), positions_(std::move(positions)) {
    std::size_t prev = 0;
    for (std::size_t p : positions_) {
        if (p <= prev || p > n_)
            throw AdviceMismatchError("inkdot pattern " + to_string(*this) +
                                      ": positions must be strictly increasing in [1, " +
                                      std::to_string(n_) + "]");
        prev = p;
    }
}

bool InkdotPattern::marks(std::size_t position) const {
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::string to_string(const InkdotPattern &pattern) {
    std::string out = "{";
    for (std::size_t i = 0; i < pattern.positions().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(pattern.positions()[i]);
    }
    out += "}/" + std::to_string(pattern.length());
    return out;
}

DottedWord apply_inkdots(std::string_view word, const InkdotPattern &pattern) {
    if (word.size() != pattern.length())
        throw AdviceMismatchError("inkdot pattern for length " +
                                  std::to_string(pattern.length()) +
                                  " applied to an input of length " +
                                  std::to_string(word.size()));
    DottedWord out = undotted(word);
    for (std::size_t p : pattern.positions())
        out[p - 1].marked = true;
    return out;
}

std::string pattern_to_track(const InkdotPattern &pattern) {
    std::string bits(pattern.length(), '0');
    for (std::size_t p : pattern.positions())
        bits[p - 1] = '1';
    return bits;
}

InkdotPattern track_to_pattern(std::string_view bits) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            positions.push_back(i + 1);
        else if (bits[i] != '0')
            throw InputDomainError(i + 1, "advice track: non-binary symbol at position " +
                                              std::to_string(i + 1));
    }
    return InkdotPattern(bits.size(), std::move(positions));
}

InkdotPattern flip_pattern(const InkdotPattern &pattern) {
    std::vector<std::size_t> positions;
    positions.reserve(pattern.length() - pattern.size());
    for (std::size_t i = 1; i <= pattern.length(); ++i)
        if (!pattern.marks(i))
            positions.push_back(i);
    return InkdotPattern(pattern.length(), std::move(positions));
}

Dfa flip_machine(const Dfa &machine) {
    if (!machine.has_both_variants())
        throw PreconditionError("flip_machine: alphabet lacks a dotted or undotted variant");
    return Dfa::from_rule(machine.state_names(), machine.start(), machine.accepting_set(),
                          machine.alphabet(), [&](Dfa::State s, DottedSymbol a) {
                              return machine.next(s, DottedSymbol{a.base, !a.marked});
                          });
}

Dfa track_to_dotted(const TrackDfa &machine) {
    if (machine.track_alphabet_size() != 2)
        throw PreconditionError("track_to_dotted: only a binary advice track maps to inkdots");
    std::vector<DottedSymbol> alphabet;
    for (char c : machine.input_alphabet()) {
        alphabet.push_back({c, false});
        alphabet.push_back({c, true});
    }
    std::vector<std::string> names;
    for (std::size_t s = 0; s < machine.state_count(); ++s)
        names.push_back("q" + std::to_string(s));
    return Dfa::from_rule(std::move(names), machine.start(), machine.accepting_set(),
                          std::move(alphabet), [&](Dfa::State s, DottedSymbol a) {
                              const auto idx = machine.input_alphabet().find(a.base);
                              return machine.next(s, idx * 2 + (a.marked ? 1 : 0));
                          });
}

TrackDfa dotted_to_track(const Dfa &machine) {
    if (!machine.has_both_variants())
        throw PreconditionError("dotted_to_track: alphabet lacks a dotted or undotted variant");
    const std::string bases = machine.base_alphabet();
    std::vector<TrackDfa::State> table;
    for (Dfa::State s = 0; s < machine.state_count(); ++s)
        for (char c : bases)
            for (bool marked : {false, true})
                table.push_back(machine.next(s, DottedSymbol{c, marked}));
    return TrackDfa(bases, 2, machine.start(), machine.accepting_set(), std::move(table));
}

// Advice functions

PrefixAdvice::PrefixAdvice(std::size_t length, Fn fn) : k_(length), fn_(std::move(fn)) {
    for (std::size_t n = 0; n <= kConstructionCheckBound; ++n)
        (void)(*this)(n);
}

std::string PrefixAdvice::operator()(std::size_t n) const {
    std::string s = fn_(n);
    if (s.size() != k_)
        throw AdviceMismatchError("prefix advice for n=" + std::to_string(n) + " has length " +
                                  std::to_string(s.size()) + ", expected " +
                                  std::to_string(k_));
    if (s.find_first_not_of("01") != std::string::npos)
        throw AdviceMismatchError("prefix advice for n=" + std::to_string(n) + " is not binary");
    return s;
}

TrackAdvice::TrackAdvice(unsigned alphabet_size, Fn fn) : t_(alphabet_size), fn_(std::move(fn)) {
    if (t_ < 2 || t_ > 10)
        throw PreconditionError("track advice: alphabet size must be in [2, 10]");
    for (std::size_t n = 0; n <= kConstructionCheckBound; ++n)
        (void)(*this)(n);
}

std::string TrackAdvice::operator()(std::size_t n) const {
    std::string s = fn_(n);
    if (s.size() != n)
        throw AdviceMismatchError("track advice for n=" + std::to_string(n) + " has length " +
                                  std::to_string(s.size()));
    for (char c : s)
        if (c < '0' || c >= static_cast<char>('0' + t_))
            throw AdviceMismatchError("track advice for n=" + std::to_string(n) +
                                      " uses a symbol outside its alphabet");
    return s;
}

InkdotAdvice::InkdotAdvice(BudgetFn budget, PatternFn pattern)
    : budget_(std::move(budget)), pattern_(std::move(pattern)) {
    for (std::size_t n = 0; n <= kConstructionCheckBound; ++n) {
        if (budget_(n) > n)
            throw AdviceMismatchError("inkdot budget at n=" + std::to_string(n) +
                                      " exceeds the input length");
        (void)(*this)(n);
    }
}

InkdotPattern InkdotAdvice::operator()(std::size_t n) const {
    InkdotPattern p = pattern_(n);
    if (p.length() != n)
        throw AdviceMismatchError("inkdot advice for n=" + std::to_string(n) +
                                  " targets length " + std::to_string(p.length()));
    if (p.size() > budget_(n))
        throw AdviceMismatchError("inkdot advice for n=" + std::to_string(n) + " uses " +
                                  std::to_string(p.size()) + " dots, budget " +
                                  std::to_string(budget_(n)));
    return p;
}

RandomizedInkdotAdvice::RandomizedInkdotAdvice(BudgetFn budget, DistributionFn distribution)
    : budget_(std::move(budget)), distribution_(std::move(distribution)) {
    for (std::size_t n = 0; n <= kConstructionCheckBound; ++n) {
        const auto problems = validate_randomized(*this, n);
        if (!problems.empty())
            throw AdviceMismatchError("randomized advice at n=" + std::to_string(n) + ": " +
                                      problems.front());
    }
}

RandomizedInkdotAdvice RandomizedInkdotAdvice::unchecked(BudgetFn budget,
                                                         DistributionFn distribution) {
    RandomizedInkdotAdvice out;
    out.budget_ = std::move(budget);
    out.distribution_ = std::move(distribution);
    return out;
}

std::vector<std::string> validate_randomized(const RandomizedInkdotAdvice &advice,
                                             std::size_t n) {
    std::vector<std::string> problems;
    PatternDistribution dist;
    std::size_t budget = 0;
    try {
        dist = advice(n);
        budget = advice.budget(n);
    } catch (const std::exception &e) {
        problems.push_back(std::string("advice function failed: ") + e.what());
        return problems;
    }
    if (dist.empty())
        problems.push_back("empty distribution");
    if (budget > n)
        problems.push_back("budget " + std::to_string(budget) + " exceeds length " +
                           std::to_string(n));
    Probability sum = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const auto &wp = dist[i];
        const std::string tag = "pattern " + std::to_string(i + 1);
        if (wp.p < Probability(0) || wp.p > Probability(1))
            problems.push_back(tag + ": probability " + to_string(wp.p) + " outside [0,1]");
        sum += wp.p;
        std::size_t prev = 0;
        for (std::size_t pos : wp.positions) {
            if (pos < 1 || pos > n) {
                problems.push_back(tag + ": position " + std::to_string(pos) +
                                   " outside [1," + std::to_string(n) + "]");
            } else if (pos <= prev) {
                problems.push_back(tag + ": positions not strictly increasing");
            }
            prev = std::max(prev, pos);
        }
        if (wp.positions.size() > budget)
            problems.push_back(tag + ": " + std::to_string(wp.positions.size()) +
                               " dots exceed budget " + std::to_string(budget));
    }
    if (!dist.empty() && sum != Probability(1))
        problems.push_back("probabilities sum to " + to_string(sum) + ", not 1");
    return problems;
}

RandomizedInkdotAdvice as_randomized(const InkdotAdvice &advice) {
    return RandomizedInkdotAdvice(
        [advice](std::size_t n) { return advice.budget(n); },
        [advice](std::size_t n) {
            return PatternDistribution{{advice(n).positions(), Probability(1)}};
        });
}

} // namespace advlab
