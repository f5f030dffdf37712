#include "advlab/tm.hpp"

#include <string>

#include "advlab/error.hpp"

namespace advlab {

OneWayTm::OneWayTm(std::vector<std::string> state_names, std::uint32_t start,
                   std::uint32_t accept, std::uint32_t reject,
                   std::vector<DottedSymbol> input_alphabet,
                   std::vector<std::string> work_alphabet, std::uint16_t blank,
                   std::vector<TmAction> table, std::optional<std::size_t> space_cap)
    : names_(std::move(state_names)), start_(start), accept_(accept), reject_(reject),
      input_(std::move(input_alphabet)), work_(std::move(work_alphabet)), blank_(blank),
      table_(std::move(table)), cap_(space_cap) {
    const auto n = names_.size();
    if (start_ >= n || accept_ >= n || reject_ >= n)
        throw PreconditionError("tm: start/accept/reject out of range");
    if (accept_ == reject_)
        throw PreconditionError("tm: accept and reject must differ");
    if (work_.empty() || blank_ >= work_.size())
        throw PreconditionError("tm: blank must be part of the work alphabet");
    if (table_.size() != n * input_columns() * work_.size())
        throw PreconditionError("tm: transition table is not total");
    for (const auto &a : table_) {
        if (a.next >= n || a.write >= work_.size())
            throw PreconditionError("tm: transition refers to an unknown state or work symbol");
        if (static_cast<int>(a.input_move) < 0)
            throw PreconditionError("tm: the input head never moves left");
    }
    for (std::size_t i = 0; i < input_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (input_[i] == input_[j])
                throw PreconditionError("tm: duplicate input symbol");
}

std::optional<std::size_t> OneWayTm::column(DottedSymbol symbol) const noexcept {
    for (std::size_t i = 0; i < input_.size(); ++i)
        if (input_[i] == symbol)
            return i;
    return std::nullopt;
}

RunResult run_tm(const OneWayTm &machine, const DottedWord &input, std::uint64_t step_budget,
                 const std::function<void(const TmStep &)> &observer) {
    if (step_budget == 0)
        throw PreconditionError("run_tm: step budget must be positive");

    std::vector<std::size_t> columns(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        const auto c = machine.column(input[i]);
        if (!c)
            throw InputDomainError(i + 1, "tm: symbol '" + to_text(input[i]) + "' at position " +
                                              std::to_string(i + 1) +
                                              " is not in the input alphabet");
        columns[i] = *c;
    }

    std::vector<std::uint16_t> tape(1, machine.blank());
    std::vector<bool> written(1, false);
    RunResult result;
    std::uint32_t state = machine.start();
    std::size_t in = 0;   // 0-based; == input.size() on the end signal
    std::size_t work = 0; // 0-based

    while (!machine.halting(state)) {
        if (result.steps == step_budget)
            return result; // halted == false
        if (observer)
            observer(TmStep{result.steps, state, in + 1, work + 1});
        const std::size_t col = in < input.size() ? columns[in] : machine.end_column();
        const TmAction &act = machine.action(state, col, tape[work]);

        if (act.write != machine.blank() && !written[work]) {
            if (machine.space_cap() && work + 1 > *machine.space_cap())
                throw SpaceCapExceeded(*machine.space_cap(),
                                       "tm: write to work cell " + std::to_string(work + 1) +
                                           " exceeds the space cap of " +
                                           std::to_string(*machine.space_cap()));
            written[work] = true;
            ++result.work_cells_used;
        }
        tape[work] = act.write;

        switch (act.work_move) {
        case WorkMove::Left:
            if (work == 0)
                throw MachineFault("tm: work head moved left of cell 1 in state '" +
                                   machine.state_name(state) + "'");
            --work;
            break;
        case WorkMove::Right:
            ++work;
            if (work == tape.size()) {
                tape.push_back(machine.blank());
                written.push_back(false);
            }
            break;
        case WorkMove::Stay:
            break;
        }
        if (act.input_move == InputMove::Right && in < input.size())
            ++in;
        state = act.next;
        ++result.steps;
    }
    result.halted = true;
    result.accepted = state == machine.accept();
    return result;
}

} // namespace advlab
