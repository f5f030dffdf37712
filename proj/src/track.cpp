#include "advlab/track.hpp"

#include "advlab/error.hpp"

namespace advlab {

TrackDfa::TrackDfa(std::string input_alphabet, unsigned track_alphabet_size, State start,
                   std::vector<bool> accepting, std::vector<State> table)
    : input_(std::move(input_alphabet)), t_(track_alphabet_size), start_(start),
      accepting_(std::move(accepting)), table_(std::move(table)) {
    if (t_ < 2 || t_ > 10)
        throw PreconditionError("track dfa: advice alphabet size must be in [2, 10]");
    if (accepting_.empty() || start_ >= accepting_.size())
        throw PreconditionError("track dfa: start state out of range");
    if (table_.size() != accepting_.size() * columns())
        throw PreconditionError("track dfa: transition table is not total");
    for (State s : table_)
        if (s >= accepting_.size())
            throw PreconditionError("track dfa: transition target out of range");
}

bool run_track(const TrackDfa &machine, std::string_view word, std::string_view track) {
    if (word.size() != track.size())
        throw AdviceMismatchError("track advice has length " + std::to_string(track.size()) +
                                  " but the input has length " + std::to_string(word.size()));
    TrackDfa::State s = machine.start();
    const auto &alpha = machine.input_alphabet();
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto a = alpha.find(word[i]);
        const int d = track[i] - '0';
        if (a == std::string::npos || d < 0 || d >= static_cast<int>(machine.track_alphabet_size()))
            throw InputDomainError(i + 1, "track dfa: symbol pair at position " +
                                              std::to_string(i + 1) + " is outside the alphabet");
        s = machine.next(s, a * machine.track_alphabet_size() + static_cast<std::size_t>(d));
    }
    return machine.accepting(s);
}

} // namespace advlab
