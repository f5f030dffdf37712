#include "advlab/dfa.hpp"

#include <string>

#include "advlab/error.hpp"

namespace advlab {

Dfa::Dfa(std::vector<std::string> state_names, State start, std::vector<bool> accepting,
         std::vector<DottedSymbol> alphabet, std::vector<State> table)
    : names_(std::move(state_names)), start_(start), accepting_(std::move(accepting)),
      alphabet_(std::move(alphabet)), table_(std::move(table)) {
    if (names_.empty())
        throw PreconditionError("dfa: at least one state is required");
    if (start_ >= names_.size())
        throw PreconditionError("dfa: start state out of range");
    if (accepting_.size() != names_.size())
        throw PreconditionError("dfa: accepting set does not match the state count");
    if (table_.size() != names_.size() * alphabet_.size())
        throw PreconditionError("dfa: transition table is not total");
    column_of_.fill(-1);
    for (std::size_t c = 0; c < alphabet_.size(); ++c) {
        auto &slot_ref = column_of_[slot(alphabet_[c])];
        if (slot_ref >= 0)
            throw PreconditionError("dfa: duplicate alphabet symbol '" + to_text(alphabet_[c]) +
                                    "'");
        slot_ref = static_cast<std::int16_t>(c);
    }
    for (State t : table_)
        if (t >= names_.size())
            throw PreconditionError("dfa: transition target out of range");
}

Dfa Dfa::from_rule(std::vector<std::string> state_names, State start,
                   std::vector<bool> accepting, std::vector<DottedSymbol> alphabet,
                   const Rule &rule) {
    std::vector<State> table;
    table.reserve(state_names.size() * alphabet.size());
    for (State s = 0; s < state_names.size(); ++s)
        for (const auto &a : alphabet)
            table.push_back(rule(s, a));
    return Dfa(std::move(state_names), start, std::move(accepting), std::move(alphabet),
               std::move(table));
}

Dfa::State Dfa::next(State s, DottedSymbol symbol) const {
    const auto c = column(symbol);
    if (!c)
        throw InputDomainError(0, "dfa: symbol '" + to_text(symbol) + "' is not in the alphabet");
    return next(s, *c);
}

std::string Dfa::base_alphabet() const {
    std::string out;
    for (const auto &a : alphabet_)
        if (out.find(a.base) == std::string::npos)
            out.push_back(a.base);
    return out;
}

bool Dfa::has_both_variants() const {
    for (const auto &a : alphabet_)
        if (column_of_[slot({a.base, !a.marked})] < 0)
            return false;
    return true;
}

bool Dfa::operator==(const Dfa &other) const {
    return names_ == other.names_ && start_ == other.start_ &&
           accepting_ == other.accepting_ && alphabet_ == other.alphabet_ &&
           table_ == other.table_;
}

Dfa::State final_state(const Dfa &machine, const DottedWord &input, std::size_t *transitions) {
    Dfa::State s = machine.start();
    std::size_t applied = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const auto c = machine.column(input[i]);
        if (!c)
            throw InputDomainError(i + 1, "dfa: symbol '" + to_text(input[i]) +
                                              "' at position " + std::to_string(i + 1) +
                                              " is not in the alphabet");
        s = machine.next(s, *c);
        ++applied;
    }
    if (transitions)
        *transitions = applied;
    return s;
}

bool run_dfa(const Dfa &machine, const DottedWord &input) {
    return machine.accepting(final_state(machine, input));
}

bool run_dfa(const Dfa &machine, std::string_view plain) {
    return run_dfa(machine, undotted(plain));
}

} // namespace advlab
