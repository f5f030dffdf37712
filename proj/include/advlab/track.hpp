#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace advlab {

/// DFA that reads an input track and an advice track in lockstep.
///
/// Input symbols are the characters of `input_alphabet`; advice symbols are
/// the digits '0' .. '0'+t-1. Column of a pair (input index a, advice digit d)
/// is a * t + d.
class TrackDfa {
public:
    using State = std::uint32_t;

    TrackDfa(std::string input_alphabet, unsigned track_alphabet_size, State start,
             std::vector<bool> accepting, std::vector<State> table);

    const std::string &input_alphabet() const noexcept { return input_; }
    unsigned track_alphabet_size() const noexcept { return t_; }
    std::size_t state_count() const noexcept { return accepting_.size(); }
    State start() const noexcept { return start_; }
    bool accepting(State s) const { return accepting_[s]; }
    const std::vector<bool> &accepting_set() const noexcept { return accepting_; }
    const std::vector<State> &table() const noexcept { return table_; }
    std::size_t columns() const noexcept { return input_.size() * t_; }

    State next(State s, std::size_t column) const noexcept { return table_[s * columns() + column]; }

    bool operator==(const TrackDfa &) const = default;

private:
    std::string input_;
    unsigned t_;
    State start_;
    std::vector<bool> accepting_;
    std::vector<State> table_;
};

/// Runs the machine on `word` with `track` written underneath it.
/// Throws AdviceMismatchError when the lengths differ and InputDomainError
/// for a symbol outside either alphabet.
bool run_track(const TrackDfa &machine, std::string_view word, std::string_view track);

} // namespace advlab
