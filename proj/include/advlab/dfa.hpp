#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advlab/symbols.hpp"

namespace advlab {

/// Deterministic finite automaton over a (possibly dotted) alphabet.
///
/// The alphabet is an explicit list of DottedSymbol values; a machine used
/// with inkdot advice lists both variants of every base, a machine used with
/// prefix advice usually lists only the unmarked ones. The transition table
/// is total and stored row-major: table[state * alphabet.size() + column].
class Dfa {
public:
    using State = std::uint32_t;
    using Rule = std::function<State(State, DottedSymbol)>;

    Dfa(std::vector<std::string> state_names, State start, std::vector<bool> accepting,
        std::vector<DottedSymbol> alphabet, std::vector<State> table);

    /// Fills the table by calling `rule` for every (state, symbol) pair.
    static Dfa from_rule(std::vector<std::string> state_names, State start,
                         std::vector<bool> accepting, std::vector<DottedSymbol> alphabet,
                         const Rule &rule);

    std::size_t state_count() const noexcept { return names_.size(); }
    State start() const noexcept { return start_; }
    bool accepting(State s) const { return accepting_[s]; }
    const std::vector<bool> &accepting_set() const noexcept { return accepting_; }
    const std::string &state_name(State s) const { return names_[s]; }
    const std::vector<std::string> &state_names() const noexcept { return names_; }
    const std::vector<DottedSymbol> &alphabet() const noexcept { return alphabet_; }
    const std::vector<State> &table() const noexcept { return table_; }

    /// Column index of `symbol`, or nullopt when it is outside the alphabet.
    std::optional<std::size_t> column(DottedSymbol symbol) const noexcept {
        const auto c = column_of_[slot(symbol)];
        if (c < 0)
            return std::nullopt;
        return static_cast<std::size_t>(c);
    }

    State next(State s, std::size_t column) const noexcept {
        return table_[s * alphabet_.size() + column];
    }
    State next(State s, DottedSymbol symbol) const;

    /// Distinct bases in first-appearance order.
    std::string base_alphabet() const;

    /// True when every base appears both marked and unmarked.
    bool has_both_variants() const;

    bool operator==(const Dfa &other) const;

private:
    static std::size_t slot(DottedSymbol s) noexcept {
        return static_cast<unsigned char>(s.base) * 2u + (s.marked ? 1u : 0u);
    }

    std::vector<std::string> names_;
    State start_;
    std::vector<bool> accepting_;
    std::vector<DottedSymbol> alphabet_;
    std::vector<State> table_;
    std::array<std::int16_t, 512> column_of_{};
};

/// State reached after consuming every cell. Throws InputDomainError naming
/// the 1-indexed position of the first symbol outside the alphabet.
/// `transitions`, when given, receives the number of transitions applied.
Dfa::State final_state(const Dfa &machine, const DottedWord &input,
                       std::size_t *transitions = nullptr);

bool run_dfa(const Dfa &machine, const DottedWord &input);

/// Convenience for unmarked input.
bool run_dfa(const Dfa &machine, std::string_view plain);

} // namespace advlab
