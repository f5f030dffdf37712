#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "advlab/symbols.hpp"

namespace advlab {

enum class WorkMove : std::int8_t { Left = -1, Stay = 0, Right = 1 };
enum class InputMove : std::int8_t { Stay = 0, Right = 1 };

struct TmAction {
    std::uint32_t next = 0;
    std::uint16_t write = 0;
    WorkMove work_move = WorkMove::Stay;
    InputMove input_move = InputMove::Stay;

    bool operator==(const TmAction &) const = default;
};

/// Turing machine with a one-way input head and one semi-infinite work tape.
///
/// Input columns are the dotted alphabet followed by one extra column for
/// the end-of-input signal, which the machine sees once its input head has
/// passed the last cell. The table is indexed
/// [(state * input_columns() + input column) * work alphabet size + work symbol].
class OneWayTm {
public:
    OneWayTm(std::vector<std::string> state_names, std::uint32_t start, std::uint32_t accept,
             std::uint32_t reject, std::vector<DottedSymbol> input_alphabet,
             std::vector<std::string> work_alphabet, std::uint16_t blank,
             std::vector<TmAction> table, std::optional<std::size_t> space_cap = std::nullopt);

    std::size_t state_count() const noexcept { return names_.size(); }
    std::uint32_t start() const noexcept { return start_; }
    std::uint32_t accept() const noexcept { return accept_; }
    std::uint32_t reject() const noexcept { return reject_; }
    bool halting(std::uint32_t s) const noexcept { return s == accept_ || s == reject_; }
    const std::string &state_name(std::uint32_t s) const { return names_[s]; }
    const std::vector<std::string> &state_names() const noexcept { return names_; }
    const std::vector<DottedSymbol> &input_alphabet() const noexcept { return input_; }
    const std::vector<std::string> &work_alphabet() const noexcept { return work_; }
    std::uint16_t blank() const noexcept { return blank_; }
    std::optional<std::size_t> space_cap() const noexcept { return cap_; }
    const std::vector<TmAction> &table() const noexcept { return table_; }

    std::size_t input_columns() const noexcept { return input_.size() + 1; }
    std::size_t end_column() const noexcept { return input_.size(); }
    std::optional<std::size_t> column(DottedSymbol symbol) const noexcept;

    const TmAction &action(std::uint32_t state, std::size_t input_column,
                           std::uint16_t work_symbol) const noexcept {
        return table_[(state * input_columns() + input_column) * work_.size() + work_symbol];
    }

    bool operator==(const OneWayTm &) const = default;

private:
    std::vector<std::string> names_;
    std::uint32_t start_;
    std::uint32_t accept_;
    std::uint32_t reject_;
    std::vector<DottedSymbol> input_;
    std::vector<std::string> work_;
    std::uint16_t blank_;
    std::vector<TmAction> table_;
    std::optional<std::size_t> cap_;
};

struct RunResult {
    bool accepted = false;
    std::uint64_t steps = 0;
    /// Distinct work cells that ever received a non-blank symbol.
    std::uint64_t work_cells_used = 0;
    bool halted = false;

    /// True when the run stopped because the step budget ran out.
    bool budget_exhausted() const noexcept { return !halted; }
};

/// Snapshot handed to a run observer before each step.
struct TmStep {
    std::uint64_t step = 0;
    std::uint32_t state = 0;
    /// 1-indexed; input length + 1 means the head is on the end signal.
    std::size_t input_position = 1;
    /// 1-indexed work cell under the head.
    std::size_t work_position = 1;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

/// Runs until the machine halts or `step_budget` steps have been taken.
/// Moving the input head right from the end signal leaves it there.
/// Throws MachineFault when the work head moves left of cell 1 and
/// SpaceCapExceeded when a write lands beyond the machine's space cap.
RunResult run_tm(const OneWayTm &machine, const DottedWord &input,
                 std::uint64_t step_budget = kDefaultStepBudget,
                 const std::function<void(const TmStep &)> &observer = {});

} // namespace advlab
