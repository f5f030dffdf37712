#include <random>

#include "doctest.h"

#include "advlab/constructions.hpp"
#include "advlab/dfa.hpp"
#include "advlab/error.hpp"
#include "advlab/symbols.hpp"
#include "advlab/tm.hpp"
#include "advlab/track.hpp"

using namespace advlab;

namespace {

const std::string kDot(kDotMark);

Dfa random_dfa(std::mt19937_64 &rng, std::size_t q, const std::vector<DottedSymbol> &alphabet) {
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (std::size_t s = 0; s < q; ++s) {
        names.push_back("s" + std::to_string(s));
        accepting.push_back(rng() & 1u);
    }
    std::vector<Dfa::State> table(q * alphabet.size());
    for (auto &t : table)
        t = static_cast<Dfa::State>(rng() % q);
    return Dfa(names, static_cast<Dfa::State>(rng() % q), accepting, alphabet, table);
}

const std::vector<DottedSymbol> kDottedBinary{{'0', false}, {'0', true}, {'1', false}, {'1', true}};

// Trivial TM: one state besides accept/reject, behaviour given per cell.
OneWayTm tiny_tm(TmAction on_blank, std::optional<std::size_t> cap = std::nullopt) {
    // states: 0 start, 1 accept, 2 reject; input alphabet {0}, work {_, x}.
    std::vector<TmAction> table;
    for (std::uint32_t s = 0; s < 3; ++s)
        for (int col = 0; col < 2; ++col)
            for (std::uint16_t w = 0; w < 2; ++w)
                table.push_back(s == 0 ? on_blank : TmAction{s, w, WorkMove::Stay, InputMove::Stay});
    return OneWayTm({"run", "acc", "rej"}, 0, 1, 2, {{'0', false}}, {"_", "x"}, 0, table, cap);
}

} // namespace

TEST_CASE("dotted words round-trip through text") {
    const DottedWord w = parse_dotted("00" + std::string("1") + kDot + "1");
    REQUIRE(w.size() == 4);
    CHECK(w[2] == DottedSymbol{'1', true});
    CHECK_FALSE(w[3].marked);
    CHECK(to_text(w) == "001" + kDot + "1");
    CHECK(bases_of(w) == "0011");
    CHECK(parse_dotted("") .empty());
    CHECK_THROWS_AS(parse_dotted(kDot + "0"), ParseError);
    CHECK_THROWS_AS(parse_dotted("\xC3\xA9"), ParseError);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        DottedWord r(rng() % 12);
        for (auto &c : r)
            c = {"01#ab"[rng() % 5], static_cast<bool>(rng() & 1u)};
        CHECK(parse_dotted(to_text(r)) == r);
    }
}

TEST_CASE("dfa construction validates its table") {
    CHECK_THROWS_AS(Dfa({}, 0, {}, kDottedBinary, {}), PreconditionError);
    CHECK_THROWS_AS(Dfa({"a"}, 1, {true}, kDottedBinary, {0, 0, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(Dfa({"a"}, 0, {true}, kDottedBinary, {0, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(Dfa({"a"}, 0, {true}, kDottedBinary, {0, 0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Dfa({"a"}, 0, {true}, {{'0', false}, {'0', false}}, {0, 0}),
                    PreconditionError);
}

TEST_CASE("two-state inkdot checker traces") {
    const Dfa m = dot_on_one_checker();
    CHECK(m.state_count() == 2);
    CHECK(run_dfa(m, parse_dotted("1" + kDot + "0")));
    CHECK_FALSE(run_dfa(m, parse_dotted("0" + kDot + "100")));
    CHECK(run_dfa(m, std::string_view("0000110")));
    CHECK(run_dfa(m, DottedWord{}) == m.accepting(m.start()));
}

TEST_CASE("run_dfa reports the offending position") {
    const Dfa m = dot_on_one_checker();
    try {
        run_dfa(m, std::string_view("01a1"));
        FAIL("expected an input-domain error");
    } catch (const InputDomainError &e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("run_dfa agrees with a naive fold and takes n transitions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Dfa m = random_dfa(rng, 1 + rng() % 5, kDottedBinary);
        for (int w = 0; w < 20; ++w) {
            DottedWord word(rng() % 15);
            for (auto &c : word)
                c = kDottedBinary[rng() % 4];
            // Naive fold: look the symbol up by linear search in the alphabet.
            std::size_t state = m.start();
            for (const auto &c : word) {
                std::size_t col = 0;
                while (!(m.alphabet()[col] == c))
                    ++col;
                state = m.table()[state * m.alphabet().size() + col];
            }
            std::size_t transitions = 0;
            CHECK(final_state(m, word, &transitions) == state);
            CHECK(transitions == word.size());
            CHECK(run_dfa(m, word) == m.accepting(static_cast<Dfa::State>(state)));
            CHECK(run_dfa(m, word) == run_dfa(m, word));
        }
    }
}

TEST_CASE("tm whose start state accepts") {
    std::vector<TmAction> table(2 * 2 * 1, TmAction{0, 0, WorkMove::Stay, InputMove::Stay});
    const OneWayTm tm({"acc", "rej"}, 0, 0, 1, {{'0', false}}, {"_"}, 0, table);
    const auto r = run_tm(tm, {});
    CHECK(r.accepted);
    CHECK(r.halted);
    CHECK(r.work_cells_used == 0);
    CHECK(r.steps == 0);
}

TEST_CASE("tm faults, caps and budgets") {
    SUBCASE("left of cell 1") {
        CHECK_THROWS_AS(run_tm(tiny_tm({0, 0, WorkMove::Left, InputMove::Stay}), undotted("0")),
                        MachineFault);
    }
    SUBCASE("space cap") {
        const auto tm = tiny_tm({0, 1, WorkMove::Right, InputMove::Stay}, 3);
        try {
            run_tm(tm, undotted("0"));
            FAIL("expected a cap violation");
        } catch (const SpaceCapExceeded &e) {
            CHECK(e.cap() == 3);
        }
    }
    SUBCASE("budget") {
        const auto r = run_tm(tiny_tm({0, 0, WorkMove::Stay, InputMove::Stay}), undotted("0"), 50);
        CHECK_FALSE(r.halted);
        CHECK_FALSE(r.accepted);
        CHECK(r.budget_exhausted());
        CHECK(r.steps == 50);
    }
    SUBCASE("cells written, not visited") {
        // Walks right writing blanks only: nothing counts as used.
        const auto r = run_tm(tiny_tm({0, 0, WorkMove::Right, InputMove::Stay}), undotted("0"), 40);
        CHECK(r.work_cells_used == 0);
    }
    SUBCASE("one-way input is enforced at construction") {
        std::vector<TmAction> table(3 * 2 * 2, TmAction{0, 0, WorkMove::Stay, InputMove::Stay});
        table[0].input_move = static_cast<InputMove>(-1);
        CHECK_THROWS_AS(
            OneWayTm({"a", "b", "c"}, 0, 1, 2, {{'0', false}}, {"_", "x"}, 0, table),
            PreconditionError);
    }
}

TEST_CASE("random tms never move the input head left") {
    std::mt19937_64 rng(5);
    const std::vector<DottedSymbol> alphabet{{'0', false}, {'1', false}, {'1', true}};
    std::uint64_t total_steps = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t q = 3 + rng() % 4;
        std::vector<TmAction> table(q * 4 * 3);
        for (auto &a : table) {
            // Mostly non-halting so the runs are long.
            a.next = static_cast<std::uint32_t>(rng() % 20 == 0 ? rng() % 2 : 2 + rng() % (q - 2));
            a.write = static_cast<std::uint16_t>(rng() % 3);
            a.work_move = static_cast<WorkMove>(static_cast<int>(rng() % 2)); // stay or right
            a.input_move = static_cast<InputMove>(static_cast<int>(rng() % 2));
        }
        std::vector<std::string> names;
        for (std::uint32_t s = 0; s < q; ++s)
            names.push_back("s" + std::to_string(s));
        const OneWayTm tm(names, 2, 0, 1, alphabet, {"_", "a", "b"}, 0, table);
        DottedWord word(rng() % 20);
        for (auto &c : word)
            c = alphabet[rng() % 3];
        std::size_t head = 1;
        bool forward = true;
        const auto r = run_tm(tm, word, 2000, [&](const TmStep &s) {
            forward = forward && s.input_position >= head && s.input_position <= word.size() + 1;
            head = s.input_position;
        });
        CHECK(forward);
        CHECK(r.work_cells_used <= r.steps);
        total_steps += r.steps;
        const auto again = run_tm(tm, word, 2000);
        CHECK(again.accepted == r.accepted);
        CHECK(again.steps == r.steps);
    }
    CHECK(total_steps >= 1000);
}

TEST_CASE("drift machine examples") {
    const auto am = drift_tm(growth_log2());
    const auto &tm = std::get<OneWayTm>(am.machine);
    auto run = [&](const std::string &w, std::vector<std::size_t> dots) {
        return run_tm(tm, apply_inkdots(w, InkdotPattern(w.size(), std::move(dots))));
    };
    const auto member = run("0100#0010###", {4});
    CHECK(member.accepted);
    CHECK(member.halted);
    // Frozen space constant: 2 * cells <= 3 * ceil(log2 4).
    CHECK(member.work_cells_used == 3);
    CHECK_FALSE(run("0100#0001###", {4}).accepted);
    CHECK_FALSE(run("0100#0010#10", {4}).accepted);
    CHECK_FALSE(run("0100#0010###", {3}).accepted);
    CHECK_FALSE(run("0100#0010###", {}).accepted);
    CHECK_FALSE(run("0100#0010###", {4, 9}).accepted);
    CHECK(run("1000#0100###", {4}).accepted);
    CHECK_FALSE(run("############", {4}).accepted);
}

TEST_CASE("track machines check both tracks") {
    // Accepts iff the two tracks agree everywhere.
    const TrackDfa eq("01", 2, 0, {true, false}, {0, 1, 1, 0, 1, 1, 1, 1});
    CHECK(run_track(eq, "0110", "0110"));
    CHECK_FALSE(run_track(eq, "0110", "0100"));
    CHECK_THROWS_AS(run_track(eq, "01", "011"), AdviceMismatchError);
    CHECK_THROWS_AS(run_track(eq, "02", "01"), InputDomainError);
    CHECK_THROWS_AS(run_track(eq, "01", "02"), InputDomainError);
}
