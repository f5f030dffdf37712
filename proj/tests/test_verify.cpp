#include <bit>
#include <set>

#include "doctest.h"

#include "advlab/error.hpp"
#include "advlab/verify.hpp"

using namespace advlab;

namespace {

// Naive separation search: every machine, every length, every dot mask.
std::optional<std::uint64_t> naive_first_witness(const LanguageOracle &oracle, std::size_t q,
                                                 std::size_t b, std::size_t max_len) {
    const DfaEnumerator machines(q, oracle.alphabet, true);
    for (std::uint64_t i = 0; i < machines.size(); ++i) {
        const Dfa m = machines.at(i);
        bool all_lengths = true;
        for (std::size_t n = 1; n <= max_len && all_lengths; ++n) {
            bool some_pattern = false;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !some_pattern;
                 ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) > b)
                    continue;
                std::vector<std::size_t> pos;
                for (std::size_t j = 0; j < n; ++j)
                    if ((mask >> j) & 1u)
                        pos.push_back(j + 1);
                const InkdotPattern p(n, pos);
                some_pattern = for_each_word_until(oracle.alphabet, n, [&](const std::string &w) {
                    return run_dfa(m, apply_inkdots(w, p)) == oracle.member(w);
                });
            }
            all_lengths = some_pattern;
        }
        if (all_lengths)
            return i;
    }
    return std::nullopt;
}

// Greedy class representatives with a direct distinguishability test.
std::uint64_t naive_index(const LanguageOracle &oracle, std::size_t len, std::size_t ext) {
    std::vector<std::string> reps;
    for_each_word(oracle.alphabet, len, [&](const std::string &x) {
        for (const auto &y : reps) {
            bool same = true;
            for (std::size_t e = 0; e <= ext && same; ++e)
                same = for_each_word_until(oracle.alphabet, e, [&](const std::string &z) {
                    return oracle.member(x + z) == oracle.member(y + z);
                });
            if (same)
                return;
        }
        reps.push_back(x);
    });
    return reps.size();
}

} // namespace

TEST_CASE("recognition reports") {
    const auto r = check_recognition(segments_recognizer(1), segments_oracle(1), 10);
    CHECK(r.agree);
    CHECK_FALSE(r.counterexample);
    CHECK(r.strings_checked == 2046);
    CHECK(r.max_len == 10);

    AdvisedMachine blank{"LANGk-dot-blank", dot_on_one_checker(),
                         InkdotAdvice([](std::size_t) { return std::size_t{0}; },
                                      [](std::size_t n) { return InkdotPattern::empty(n); }),
                         "LANGk:2"};
    const auto bad = check_recognition(blank, residue_bit_oracle(2), 6);
    CHECK_FALSE(bad.agree);
    REQUIRE(bad.counterexample);
    // Shortlex-first counterexample; "0100" is another one.
    CHECK(bad.counterexample->word == "00");
    CHECK_FALSE(bad.counterexample->oracle_member);
    CHECK(bad.counterexample->machine_accepts == Probability(1));
    CHECK_FALSE(residue_bit_oracle(2).member("0100"));
    CHECK(accepts(blank, "0100"));

    CHECK_THROWS_AS(check_recognition(segments_recognizer(1), drift_oracle(growth_log2()), 4),
                    PreconditionError);
}

TEST_CASE("randomized recognition and exact probabilities") {
    const auto am = randomized_four_segments();
    const auto &m = std::get<Dfa>(am.machine);
    const auto &adv = std::get<RandomizedInkdotAdvice>(am.advice);
    CHECK(acceptance_probability(m, adv, "00110011") == Probability(1));
    CHECK(acceptance_probability(m, adv, "00110111") == Probability(1, 3));
    const Dfa never({"r"}, 0, {false}, m.alphabet(),
                    std::vector<Dfa::State>(m.alphabet().size(), 0));
    CHECK(acceptance_probability(never, adv, "0101") == Probability(0));

    CHECK(max_error(am, segments_oracle(3), 16) == Probability(1, 3));
    CHECK(check_recognition(am, segments_oracle(3), 12).agree);
    CHECK(max_error(segments_recognizer(2), segments_oracle(2), 8) == Probability(0));
    const Dfa always({"a"}, 0, {true}, m.alphabet(),
                     std::vector<Dfa::State>(m.alphabet().size(), 0));
    const AdvisedMachine yes{"yes", always, adv, "L3"};
    CHECK(max_error(yes, segments_oracle(3), 8) == Probability(1));

    // Accept and reject probabilities sum to one for every word.
    for (std::size_t n = 1; n <= 12; ++n)
        for_each_word("01", n, [&](const std::string &w) {
            const Probability p = acceptance_probability(m, adv, w);
            Probability reject(0);
            for (const auto &wp : adv(n))
                if (!run_dfa(m, apply_inkdots(w, InkdotPattern(n, wp.positions))))
                    reject += wp.p;
            CHECK(p + reject == Probability(1));
        });

    const auto broken = RandomizedInkdotAdvice::unchecked(
        [](std::size_t) { return std::size_t{0}; },
        [](std::size_t) { return PatternDistribution{{{}, Probability(1, 2)}}; });
    CHECK_THROWS_AS(acceptance_probability(m, broken, "0011"), AdviceMismatchError);
}

TEST_CASE("dfa enumeration") {
    CHECK(DfaEnumerator(1, "01", false).size() == 2);
    CHECK(DfaEnumerator(2, "01", true).size() == 1024);
    CHECK(DfaEnumerator(0, "01", true).size() == 0);
    CHECK(DfaEnumerator(3, "01", false).size() == 729 * 8);
    CHECK_THROWS_AS(DfaEnumerator(4, "01", true, 1000), SearchRefused);

    const DfaEnumerator e(2, "01", false);
    std::set<std::pair<std::vector<Dfa::State>, std::vector<bool>>> seen;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        const Dfa m = e.at(i);
        CHECK(m.start() == 0);
        seen.insert({m.table(), m.accepting_set()});
    }
    CHECK(seen.size() == e.size());
    CHECK(e.at(0).table() == std::vector<Dfa::State>{0, 0, 0, 0});
    CHECK(e.at(1).table() == std::vector<Dfa::State>{1, 0, 0, 0});
}

TEST_CASE("separation examples") {
    const auto l1 = search_separation(segments_oracle(1), 1, 0, 6);
    CHECK_FALSE(l1.witness_found);
    CHECK(l1.machines_searched == l1.machine_space);

    const auto all = search_separation(universal_oracle("01"), 1, 0, 6);
    REQUIRE(all.witness_found);
    CHECK(all.witness->accepting(all.witness->start()));
    CHECK(all.witness_advice.size() == 6);

    const auto l3 = search_separation(segments_oracle(3), 2, 2, 10);
    CHECK_FALSE(l3.witness_found);
    CHECK(l3.machines_searched == 1024);
    CHECK(l3.tuple_space == 98562048);
}

TEST_CASE("certificate sizes match closed forms") {
    const auto c = search_separation(segments_oracle(2), 2, 1, 5);
    CHECK(c.machine_space == 1024);
    REQUIRE(c.patterns_per_length.size() == 5);
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(c.patterns_per_length[n - 1] == n + 1);
    std::uint64_t tuples = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        tuples += (n + 1) * (std::uint64_t{1} << n);
    CHECK(c.tuple_space == 1024 * tuples);
    CHECK(separation_search_size(2, 2, 1, 5) == c.tuple_space);
    CHECK(separation_search_size(2, 30, 30, 64) == UINT64_MAX);
}

TEST_CASE("separation search matches a naive search") {
    for (const char *name : {"Lm:1", "Lm:2", "LANGk:2", "all:01", "Lf:sqrt"})
        for (std::size_t q = 1; q <= 2; ++q)
            for (std::size_t b = 0; b <= 1; ++b)
                for (std::size_t n = 1; n <= 4; ++n) {
                    const std::string label = name;
                    CAPTURE(label);
                    CAPTURE(q);
                    CAPTURE(b);
                    CAPTURE(n);
                    const auto oracle = oracle_by_name(name);
                    const auto cert = search_separation(oracle, q, b, n);
                    const auto naive = naive_first_witness(oracle, q, b, n);
                    CHECK(cert.witness_found == naive.has_value());
                    if (naive) {
                        CHECK(cert.machines_searched == *naive + 1);
                        // The witness and its advice really decide every length.
                        for (std::size_t len = 1; len <= n; ++len)
                            for_each_word(oracle.alphabet, len, [&](const std::string &w) {
                                CHECK(run_dfa(*cert.witness,
                                              apply_inkdots(w, cert.witness_advice[len - 1])) ==
                                      oracle.member(w));
                            });
                    }
                }
}

TEST_CASE("separation outcomes are monotone") {
    const auto oracle = segments_oracle(1);
    for (std::size_t q = 1; q <= 2; ++q)
        for (std::size_t b = 0; b <= 2; ++b) {
            bool previous = true;
            for (std::size_t n = 1; n <= 6; ++n) {
                const bool found = search_separation(oracle, q, b, n).witness_found;
                // A witness at n is a witness at n - 1.
                CHECK((!found || previous));
                previous = found;
                if (!found) {
                    for (std::size_t q2 = 1; q2 <= q; ++q2)
                        for (std::size_t b2 = 0; b2 <= b; ++b2)
                            CHECK_FALSE(search_separation(oracle, q2, b2, n).witness_found);
                }
            }
        }
}

TEST_CASE("separation results do not depend on the worker count") {
    const auto oracle = segments_oracle(1);
    const auto one = search_separation(oracle, 2, 1, 5, kDefaultCeiling, 1);
    for (unsigned jobs : {2u, 3u, 5u}) {
        const auto many = search_separation(oracle, 2, 1, 5, kDefaultCeiling, jobs);
        CHECK(many.witness_found == one.witness_found);
        CHECK(many.machines_searched == one.machines_searched);
        if (one.witness)
            CHECK(*many.witness == *one.witness);
    }
    const auto all_one = search_separation(universal_oracle("01"), 2, 0, 4, kDefaultCeiling, 1);
    const auto all_four = search_separation(universal_oracle("01"), 2, 0, 4, kDefaultCeiling, 4);
    CHECK(all_one.machines_searched == all_four.machines_searched);
}

TEST_CASE("search refusal") {
    try {
        search_separation(segments_oracle(3), 3, 2, 12, 1000);
        FAIL("expected a refusal");
    } catch (const SearchRefused &e) {
        CHECK(e.ceiling() == 1000);
        CHECK(e.required() == separation_search_size(2, 3, 2, 12));
    }
    CHECK_THROWS_AS(myhill_nerode_index(residue_bit_oracle(3), 20, 20, 1000), SearchRefused);
    CHECK_THROWS_AS(fact1_class_count(segments_oracle(1), 30, 1000), SearchRefused);
}

TEST_CASE("myhill-nerode index") {
    CHECK(myhill_nerode_index(residue_bit_oracle(2), 2, 4) == 4);
    CHECK(myhill_nerode_index(residue_bit_oracle(3), 3, 6) == 8);
    CHECK(myhill_nerode_index(universal_oracle("01"), 3, 3) == 1);
    for (const char *name : {"LANGk:2", "LANGk:3", "Lm:1", "Lm:2", "Lf:log2"}) {
        const std::string label = name;
        CAPTURE(label);
        const auto oracle = oracle_by_name(name);
        for (std::size_t len = 0; len <= 4; ++len) {
            std::uint64_t prev = 0;
            for (std::size_t ext = 0; ext <= 6; ++ext) {
                const auto idx = myhill_nerode_index(oracle, len, ext);
                CHECK(idx == naive_index(oracle, len, ext));
                CHECK(idx >= prev);
                prev = idx;
            }
        }
    }
}

TEST_CASE("fact 1 class statistics") {
    const auto r = fact1_class_count(segments_oracle(1), 4);
    bool found = false;
    for (const auto &g : r.groups)
        if (g.n == 4 && g.prefix_len == 2) {
            CHECK(g.classes == 2);
            found = true;
        }
    CHECK(found);
    std::uint64_t best = 0;
    for (const auto &g : r.groups)
        best = std::max(best, g.classes);
    CHECK(r.max_group_count == best);

    CHECK(fact1_class_count(universal_oracle("01"), 5).max_group_count == 1);

    std::uint64_t prev = 0;
    for (std::size_t n = 4; n <= 10; ++n) {
        const auto c = fact1_class_count(drift_oracle(growth_log2()), n).max_group_count;
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(prev >= 3);
}
