// One-way TM for the drifting-subwords language.
//
// The work tape holds five tracks per cell: the learned subword width,
// a position counter, the previous 1-position, a scratch register and a
// home flag on cell 1. Counters are binary with the least significant bit
// on cell 1. Every counter stays <= width, so the machine never writes
// past cell bit_width(width). Between input symbols the work head rests on
// cell 1; subroutines run with the input head paused.

#include <functional>
#include <string>
#include <vector>

#include "advlab/constructions.hpp"
#include "advlab/error.hpp"

namespace advlab {

namespace {

enum Track : unsigned { kWidth = 0, kCount = 1, kPrev = 2, kScratch = 3, kHome = 4 };
constexpr unsigned kTrackCount = 5;
constexpr std::uint16_t kBlank = 0;
constexpr std::uint16_t kWorkSymbols = 1u + (1u << kTrackCount);

int bit(std::uint16_t sym, Track t) { return sym == kBlank ? 0 : ((sym - 1) >> t) & 1; }

std::uint16_t with_bit(std::uint16_t sym, Track t, int v) {
    unsigned bits = sym == kBlank ? 0u : sym - 1u;
    bits = v ? bits | (1u << t) : bits & ~(1u << t);
    return static_cast<std::uint16_t>(1u + bits);
}

struct Input {
    bool end = false;
    DottedSymbol symbol;
};

class Assembler {
public:
    using Rule = std::function<TmAction(Input, std::uint16_t)>;

    explicit Assembler(std::vector<DottedSymbol> alphabet) : alphabet_(std::move(alphabet)) {}

    std::uint32_t declare(const std::string &name) {
        names_.push_back(name);
        rules_.emplace_back();
        return static_cast<std::uint32_t>(names_.size() - 1);
    }

    std::uint32_t fresh(const std::string &stem) {
        return declare(stem + "#" + std::to_string(++counter_));
    }

    void define(std::uint32_t id, Rule rule) { rules_[id] = std::move(rule); }

    OneWayTm finish(std::uint32_t start, std::uint32_t accept, std::uint32_t reject) const {
        const std::size_t cols = alphabet_.size() + 1;
        std::vector<TmAction> table;
        table.reserve(names_.size() * cols * kWorkSymbols);
        for (std::uint32_t s = 0; s < names_.size(); ++s) {
            if (!rules_[s])
                throw PreconditionError("drift tm: state '" + names_[s] + "' has no rule");
            for (std::size_t c = 0; c < cols; ++c) {
                const Input in = c == alphabet_.size() ? Input{true, {}} : Input{false, alphabet_[c]};
                for (std::uint16_t w = 0; w < kWorkSymbols; ++w)
                    table.push_back(rules_[s](in, w));
            }
        }
        std::vector<std::string> work{"_"};
        for (unsigned bits = 0; bits < (1u << kTrackCount); ++bits) {
            std::string name;
            for (unsigned t = 0; t < kTrackCount; ++t)
                name.push_back((bits >> t) & 1u ? '1' : '0');
            work.push_back(name);
        }
        return OneWayTm(names_, start, accept, reject, alphabet_, std::move(work), kBlank,
                        std::move(table));
    }

private:
    std::vector<DottedSymbol> alphabet_;
    std::vector<std::string> names_;
    std::vector<Rule> rules_;
    unsigned counter_ = 0;
};

TmAction act(std::uint32_t next, std::uint16_t write, WorkMove wm = WorkMove::Stay,
             InputMove im = InputMove::Stay) {
    return {next, write, wm, im};
}

const char *track_name(Track t) {
    switch (t) {
    case kWidth: return "W";
    case kCount: return "C";
    case kPrev: return "P";
    case kScratch: return "S";
    case kHome: return "H";
    }
    return "?";
}

class DriftMachineBuilder {
public:
    DriftMachineBuilder()
        : as_({{'0', false}, {'0', true}, {'1', false}, {'1', true}, {'#', false}, {'#', true}}) {
        accept_ = as_.declare("accept");
        reject_ = as_.declare("reject");
        for (auto id : {accept_, reject_}) {
            as_.define(id, [id](Input, std::uint16_t w) { return act(id, w); });
        }
    }

    OneWayTm build();

private:
    std::uint32_t home(std::uint32_t cont) {
        const auto id = as_.fresh("home");
        as_.define(id, [id, cont](Input, std::uint16_t w) {
            return bit(w, kHome) ? act(cont, w) : act(id, w, WorkMove::Left);
        });
        return id;
    }

    std::uint32_t increment(Track t, std::uint32_t cont) {
        const auto id = as_.fresh(std::string("inc.") + track_name(t));
        const auto back = home(cont);
        as_.define(id, [=](Input, std::uint16_t w) {
            return bit(w, t) ? act(id, with_bit(w, t, 0), WorkMove::Right)
                             : act(back, with_bit(w, t, 1));
        });
        return id;
    }

    // Requires a positive value; running off the end rejects.
    std::uint32_t decrement(Track t, std::uint32_t cont) {
        const auto id = as_.fresh(std::string("dec.") + track_name(t));
        const auto back = home(cont);
        const auto reject = reject_;
        as_.define(id, [=](Input, std::uint16_t w) {
            if (w == kBlank)
                return act(reject, w);
            return bit(w, t) ? act(back, with_bit(w, t, 0))
                             : act(id, with_bit(w, t, 1), WorkMove::Right);
        });
        return id;
    }

    std::uint32_t copy(Track from, Track to, std::uint32_t cont) {
        const auto id =
            as_.fresh(std::string("copy.") + track_name(from) + ">" + track_name(to));
        const auto back = home(cont);
        as_.define(id, [=](Input, std::uint16_t w) {
            if (w == kBlank)
                return act(back, w, WorkMove::Left);
            return act(id, with_bit(w, to, bit(w, from)), WorkMove::Right);
        });
        return id;
    }

    std::uint32_t clear(Track t, std::uint32_t cont) {
        const auto id = as_.fresh(std::string("clear.") + track_name(t));
        const auto back = home(cont);
        as_.define(id, [=](Input, std::uint16_t w) {
            if (w == kBlank)
                return act(back, w, WorkMove::Left);
            return act(id, with_bit(w, t, 0), WorkMove::Right);
        });
        return id;
    }

    std::uint32_t equal(Track a, Track b, std::uint32_t yes, std::uint32_t no) {
        const auto id = as_.fresh(std::string("eq.") + track_name(a) + track_name(b));
        const auto back_yes = home(yes);
        const auto back_no = home(no);
        as_.define(id, [=](Input, std::uint16_t w) {
            if (w == kBlank)
                return act(back_yes, w, WorkMove::Left);
            if (bit(w, a) != bit(w, b))
                return act(back_no, w);
            return act(id, w, WorkMove::Right);
        });
        return id;
    }

    std::uint32_t advance(std::uint32_t next) {
        const auto id = as_.fresh("advance");
        as_.define(id, [next](Input, std::uint16_t w) {
            return act(next, w, WorkMove::Stay, InputMove::Right);
        });
        return id;
    }

    // Continues at `ok` when |count - prev| <= 1, rejects otherwise.
    std::uint32_t drift_check(std::uint32_t ok) {
        const auto count_above =
            copy(kCount, kScratch, decrement(kScratch, equal(kScratch, kPrev, ok, reject_)));
        const auto count_below =
            copy(kPrev, kScratch, decrement(kScratch, equal(kScratch, kCount, ok, count_above)));
        return equal(kCount, kPrev, ok, count_below);
    }

    Assembler as_;
    std::uint32_t accept_ = 0;
    std::uint32_t reject_ = 0;
};

OneWayTm DriftMachineBuilder::build() {
    const auto reject = reject_;
    const auto accept = accept_;

    const auto init = as_.declare("init");
    // First subword: count cells until the inkdot, which fixes the width.
    const std::uint32_t first_read[2] = {as_.declare("first.read"),
                                         as_.declare("first.read.one")};
    const std::uint32_t first_counted[2] = {as_.declare("first.counted"),
                                            as_.declare("first.counted.one")};
    const auto first_after_one = as_.declare("first.after_one");
    const std::uint32_t first_expect_sep[2] = {as_.declare("first.expect_sep"),
                                               as_.declare("first.expect_sep.one")};
    // Later subwords: compare against the width and track the 1-position.
    const auto sub_start = as_.declare("sub.start");
    const std::uint32_t sub_read[2] = {as_.declare("sub.read"), as_.declare("sub.read.one")};
    const std::uint32_t sub_counted[2] = {as_.declare("sub.counted"),
                                          as_.declare("sub.counted.one")};
    const auto tail = as_.declare("tail");

    as_.define(init, [=](Input, std::uint16_t w) {
        return act(first_read[0], with_bit(w, kHome, 1));
    });

    for (int s = 0; s < 2; ++s) {
        const auto count_it = increment(kCount, first_counted[s]);
        as_.define(first_read[s], [=](Input in, std::uint16_t w) {
            if (in.end || in.symbol.base == '#')
                return act(reject, w);
            return act(count_it, w);
        });

        const auto dot_done = advance(first_expect_sep[s]);
        const auto learn_width = copy(kCount, kWidth, dot_done);
        const auto next = advance(first_read[s]);
        const auto record_one = copy(kCount, kPrev, first_after_one);
        as_.define(first_counted[s], [=](Input in, std::uint16_t w) {
            if (in.symbol.base == '1')
                return act(s ? reject : record_one, w);
            return act(in.symbol.marked ? learn_width : next, w);
        });

        const auto finish_first = clear(kCount, advance(sub_start));
        as_.define(first_expect_sep[s], [=](Input in, std::uint16_t w) {
            if (!in.end && s && in.symbol == DottedSymbol{'#', false})
                return act(finish_first, w);
            return act(reject, w);
        });
    }
    {
        const auto learn_width = copy(kCount, kWidth, advance(first_expect_sep[1]));
        const auto next = advance(first_read[1]);
        as_.define(first_after_one, [=](Input in, std::uint16_t w) {
            return act(in.symbol.marked ? learn_width : next, w);
        });
    }

    const auto to_tail = advance(tail);
    for (int s = 0; s < 2; ++s) {
        const auto count_it = equal(kCount, kWidth, reject, increment(kCount, sub_counted[s]));
        const auto close = equal(kCount, kWidth, clear(kCount, advance(sub_start)), reject);
        as_.define(sub_read[s], [=](Input in, std::uint16_t w) {
            if (in.end || in.symbol.marked)
                return act(reject, w);
            if (in.symbol.base == '#')
                return act(s ? close : reject, w);
            return act(count_it, w);
        });

        const auto next = advance(sub_read[s]);
        const auto moved_one = drift_check(copy(kCount, kPrev, advance(sub_read[1])));
        as_.define(sub_counted[s], [=](Input in, std::uint16_t w) {
            if (in.symbol.base == '1')
                return act(s ? reject : moved_one, w);
            return act(next, w);
        });
    }
    {
        const auto count_it = equal(kCount, kWidth, reject, increment(kCount, sub_counted[0]));
        as_.define(sub_start, [=](Input in, std::uint16_t w) {
            if (in.end)
                return act(accept, w);
            if (in.symbol.marked)
                return act(reject, w);
            if (in.symbol.base == '#')
                return act(to_tail, w);
            return act(count_it, w);
        });
    }
    as_.define(tail, [=](Input in, std::uint16_t w) {
        if (in.end)
            return act(accept, w);
        if (in.symbol == DottedSymbol{'#', false})
            return act(to_tail, w);
        return act(reject, w);
    });

    return as_.finish(init, accept, reject);
}

} // namespace

OneWayTm build_drift_machine() { return DriftMachineBuilder().build(); }

} // namespace advlab
