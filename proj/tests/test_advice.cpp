#include <random>

#include "doctest.h"

#include "advlab/advice.hpp"
#include "advlab/constructions.hpp"
#include "advlab/error.hpp"

using namespace advlab;

namespace {

const std::string kDot(kDotMark);

InkdotPattern pattern_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u)
            positions.push_back(i + 1);
    return InkdotPattern(n, positions);
}

} // namespace

TEST_CASE("patterns are validated") {
    CHECK_NOTHROW(InkdotPattern(4, {1, 4}));
    CHECK_THROWS_AS(InkdotPattern(4, {0}), AdviceMismatchError);
    CHECK_THROWS_AS(InkdotPattern(4, {5}), AdviceMismatchError);
    CHECK_THROWS_AS(InkdotPattern(4, {2, 2}), AdviceMismatchError);
    CHECK_THROWS_AS(InkdotPattern(4, {3, 2}), AdviceMismatchError);
    CHECK(to_string(InkdotPattern(6, {2, 5})) == "{2,5}/6");
}

TEST_CASE("apply_inkdots") {
    CHECK(to_text(apply_inkdots("0011", InkdotPattern(4, {3}))) == "001" + kDot + "1");
    CHECK(apply_inkdots("abc", InkdotPattern::empty(3)) == undotted("abc"));
    CHECK(to_text(apply_inkdots("0100", InkdotPattern(4, {1}))) == "0" + kDot + "100");
    CHECK_THROWS_AS(apply_inkdots("010", InkdotPattern(4, {1})), AdviceMismatchError);
}

TEST_CASE("patterns and binary tracks") {
    CHECK(pattern_to_track(InkdotPattern(6, {2, 5})) == "010010");
    CHECK(pattern_to_track(InkdotPattern::empty(3)) == "000");
    CHECK(pattern_to_track(InkdotPattern(3, {1, 2, 3})) == "111");
    CHECK(track_to_pattern("010010") == InkdotPattern(6, {2, 5}));
    CHECK(track_to_pattern("000") == InkdotPattern::empty(3));
    CHECK(track_to_pattern("111") == InkdotPattern(3, {1, 2, 3}));
    CHECK_THROWS_AS(track_to_pattern("0120"), InputDomainError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 17 + rng() % 200;
        std::string bits(n, '0');
        for (auto &b : bits)
            b = rng() & 1u ? '1' : '0';
        CHECK(pattern_to_track(track_to_pattern(bits)) == bits);
        const auto p = track_to_pattern(bits);
        CHECK(track_to_pattern(pattern_to_track(p)) == p);
    }
}

TEST_CASE("flip_pattern") {
    CHECK(flip_pattern(InkdotPattern(4, {1, 2, 3})) == InkdotPattern(4, {4}));
    CHECK(flip_pattern(InkdotPattern::empty(2)) == InkdotPattern(2, {1, 2}));
    CHECK(flip_pattern(flip_pattern(InkdotPattern(6, {2, 5}))) == InkdotPattern(6, {2, 5}));
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto p = pattern_from_mask(n, mask);
            const auto f = flip_pattern(p);
            CHECK(f.size() == n - p.size());
            CHECK(flip_pattern(f) == p);
            for (std::size_t i = 1; i <= n; ++i)
                CHECK(f.marks(i) != p.marks(i));
        }
}

TEST_CASE("flip_machine") {
    const Dfa m = dot_on_one_checker();
    const Dfa f = flip_machine(m);
    CHECK(flip_machine(f) == m);
    CHECK(f.table() != m.table());
    // Undotted 0 is now what sends it to the reject state.
    CHECK_FALSE(run_dfa(f, undotted("10")));
    CHECK(run_dfa(f, parse_dotted("1" + kDot + "0" + kDot)));

    // A machine that ignores marks is its own flip.
    const Dfa blind = Dfa::from_rule({"even", "odd"}, 0, {true, false},
                                     {{'0', false}, {'0', true}, {'1', false}, {'1', true}},
                                     [](Dfa::State s, DottedSymbol a) -> Dfa::State {
                                         return a.base == '1' ? 1 - s : s;
                                     });
    CHECK(flip_machine(blind) == blind);

    const auto prefix_only = residue_prefix_machine(2);
    CHECK_THROWS_AS(flip_machine(std::get<Dfa>(prefix_only.machine)), PreconditionError);
}

TEST_CASE("semantic flip invariance on the two-state checker") {
    const Dfa m = dot_on_one_checker();
    const Dfa f = flip_machine(m);
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
            std::string w(n, '0');
            for (std::size_t i = 0; i < n; ++i)
                if ((word >> i) & 1u)
                    w[i] = '1';
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const auto p = pattern_from_mask(n, mask);
                CHECK(run_dfa(m, apply_inkdots(w, p)) ==
                      run_dfa(f, apply_inkdots(w, flip_pattern(p))));
            }
        }
}

TEST_CASE("track and dotted machines convert both ways") {
    const Dfa m = dot_on_one_checker();
    const TrackDfa t = dotted_to_track(m);
    CHECK(t.track_alphabet_size() == 2);
    CHECK(track_to_dotted(t).table() == m.table());
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 12;
        std::string w(n, '0'), bits(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = rng() & 1u ? '1' : '0';
            bits[i] = rng() & 1u ? '1' : '0';
        }
        CHECK(run_track(t, w, bits) == run_dfa(m, apply_inkdots(w, track_to_pattern(bits))));
    }
    const TrackDfa ternary("01", 3, 0, {true}, std::vector<TrackDfa::State>(6, 0));
    CHECK_THROWS_AS(track_to_dotted(ternary), PreconditionError);
}

TEST_CASE("advice functions check their contracts at construction") {
    CHECK_THROWS_AS(PrefixAdvice(2, [](std::size_t) { return std::string("1"); }),
                    AdviceMismatchError);
    CHECK_THROWS_AS(PrefixAdvice(1, [](std::size_t) { return std::string("2"); }),
                    AdviceMismatchError);
    CHECK_THROWS_AS(TrackAdvice(2, [](std::size_t n) { return std::string(n + 1, '0'); }),
                    AdviceMismatchError);
    CHECK_THROWS_AS(TrackAdvice(2, [](std::size_t n) { return std::string(n, '2'); }),
                    AdviceMismatchError);
    CHECK_THROWS_AS(TrackAdvice(1, [](std::size_t n) { return std::string(n, '0'); }),
                    PreconditionError);
    CHECK_THROWS_AS(InkdotAdvice([](std::size_t) { return std::size_t{1}; },
                                 [](std::size_t n) { return InkdotPattern::empty(n); }),
                    AdviceMismatchError);
    CHECK_THROWS_AS(
        InkdotAdvice([](std::size_t n) { return n < 1 ? n : 1; },
                     [](std::size_t n) {
                         return n < 2 ? InkdotPattern::empty(n) : InkdotPattern(n, {1, 2});
                     }),
        AdviceMismatchError);
    CHECK_THROWS_AS(InkdotAdvice([](std::size_t) { return std::size_t{0}; },
                                 [](std::size_t) { return InkdotPattern::empty(3); }),
                    AdviceMismatchError);
}

TEST_CASE("validate_randomized") {
    const auto l3 = randomized_four_segments();
    const auto &adv = std::get<RandomizedInkdotAdvice>(l3.advice);
    CHECK(validate_randomized(adv, 8).empty());
    const auto dist = adv(8);
    REQUIRE(dist.size() == 3);
    for (const auto &wp : dist)
        CHECK(wp.p == Probability(1, 3));

    const auto bad_sum = RandomizedInkdotAdvice::unchecked(
        [](std::size_t n) { return std::min<std::size_t>(1, n); },
        [](std::size_t) {
            return PatternDistribution{{{}, Probability(1, 2)}, {{}, Probability(1, 3)}};
        });
    const auto sum_problems = validate_randomized(bad_sum, 8);
    REQUIRE(sum_problems.size() == 1);
    CHECK(sum_problems[0].find("sum") != std::string::npos);

    const auto bad_pos = RandomizedInkdotAdvice::unchecked(
        [](std::size_t n) { return std::min<std::size_t>(1, n); },
        [](std::size_t) { return PatternDistribution{{{9}, Probability(1)}}; });
    const auto pos_problems = validate_randomized(bad_pos, 8);
    REQUIRE(pos_problems.size() == 1);
    CHECK(pos_problems[0].find("outside") != std::string::npos);

    const auto over_budget = RandomizedInkdotAdvice::unchecked(
        [](std::size_t) { return std::size_t{0}; },
        [](std::size_t) { return PatternDistribution{{{1}, Probability(1)}}; });
    CHECK_FALSE(validate_randomized(over_budget, 8).empty());

    const auto negative = RandomizedInkdotAdvice::unchecked(
        [](std::size_t) { return std::size_t{0}; },
        [](std::size_t) {
            return PatternDistribution{{{}, Probability(-1, 2)}, {{}, Probability(3, 2)}};
        });
    CHECK(validate_randomized(negative, 4).size() == 2);

    const auto throwing = RandomizedInkdotAdvice::unchecked(
        [](std::size_t) { return std::size_t{0}; },
        [](std::size_t) -> PatternDistribution { throw std::runtime_error("boom"); });
    CHECK_NOTHROW(validate_randomized(throwing, 4));
    CHECK(validate_randomized(throwing, 4).size() == 1);

    CHECK_THROWS_AS(RandomizedInkdotAdvice([](std::size_t) { return std::size_t{0}; },
                                           [](std::size_t) { return PatternDistribution{}; }),
                    AdviceMismatchError);
}

TEST_CASE("every shipped advice function respects its budget up to n = 64") {
    for (const char *name : {"Lm:1", "Lm:2", "Lm:3", "Lf:sqrt", "Lf:log2", "Lf:loglog", "LANGk-dot:2",
                             "LANGk-dot:4", "Lg:log2", "Lg:sqrt", "L3rand"}) {
        const std::string label = name;
        CAPTURE(label);
        const auto am = build_by_name(name);
        for (std::size_t n = 0; n <= 64; ++n) {
            if (const auto *a = std::get_if<InkdotAdvice>(&am.advice)) {
                CHECK(a->budget(n) <= n);
                CHECK((*a)(n).size() <= a->budget(n));
            } else if (const auto *r = std::get_if<RandomizedInkdotAdvice>(&am.advice)) {
                CHECK(validate_randomized(*r, n).empty());
            }
        }
    }
    for (unsigned k = 2; k <= 4; ++k) {
        const auto am = residue_prefix_machine(k);
        const auto &a = std::get<PrefixAdvice>(am.advice);
        for (std::size_t n = 0; n <= 64; ++n)
            CHECK(a(n).size() == k);
    }
}

TEST_CASE("as_randomized is a point mass") {
    const auto am = segments_recognizer(2);
    const auto r = as_randomized(std::get<InkdotAdvice>(am.advice));
    const auto dist = r(9);
    REQUIRE(dist.size() == 1);
    CHECK(dist[0].p == Probability(1));
    CHECK(dist[0].positions == std::vector<std::size_t>{4, 7});
}
