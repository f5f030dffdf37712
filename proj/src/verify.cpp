#include "advlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "advlab/error.hpp"

namespace advlab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a)
        return kSaturated;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
        r = sat_mul(r, base);
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::uint64_t patterns_up_to(std::size_t n, std::size_t b) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= std::min(n, b); ++j)
        total = sat_add(total, binomial(n, j));
    return total;
}

std::string describe_advice(const AdviceScheme &advice, std::size_t n) {
    return std::visit(
        [n](const auto &a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, PrefixAdvice> || std::is_same_v<T, TrackAdvice>) {
                return a(n);
            } else if constexpr (std::is_same_v<T, InkdotAdvice>) {
                return to_string(a(n));
            } else {
                std::string out;
                for (const auto &wp : a(n)) {
                    if (!out.empty())
                        out += ' ';
                    out += to_string(InkdotPattern(n, wp.positions)) + "@" + to_string(wp.p);
                }
                return out;
            }
        },
        advice);
}

void require_alphabet(const AdvisedMachine &am, const LanguageOracle &oracle) {
    const std::string machine_bases = input_alphabet(am.machine);
    for (char c : oracle.alphabet)
        if (machine_bases.find(c) == std::string::npos)
            throw PreconditionError("oracle " + oracle.name + " uses symbol '" +
                                    std::string(1, c) + "' which " + am.name + " cannot read");
}

/// Calls every k-subset of {1..n} in increasing size, then lexicographically.
bool for_each_pattern_until(std::size_t n, std::size_t max_dots,
                            const std::function<bool(const std::vector<std::size_t> &)> &visit) {
    for (std::size_t k = 0; k <= std::min(n, max_dots); ++k) {
        std::vector<std::size_t> pos(k);
        for (std::size_t i = 0; i < k; ++i)
            pos[i] = i + 1;
        while (true) {
            if (!visit(pos))
                return false;
            std::size_t i = k;
            while (i > 0 && pos[i - 1] == n - k + i)
                --i;
            if (i == 0)
                break;
            ++pos[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pos[j] = pos[j - 1] + 1;
        }
    }
    return true;
}

/// Data shared by every machine of a separation search.
struct SearchLength {
    std::size_t n = 0;
    std::vector<std::string> members;
    std::uint64_t member_count = 0;
    std::vector<std::vector<std::size_t>> patterns;
};

/// Number of length-n words over the columns `plain` (unmarked) that the
/// machine accepts, with the cells in `pattern` read through `marked`.
std::uint64_t count_accepted(const Dfa &machine, const std::vector<std::size_t> &plain,
                             const std::vector<std::size_t> &marked, std::size_t n,
                             const std::vector<std::size_t> &pattern,
                             std::vector<std::uint64_t> &cur, std::vector<std::uint64_t> &nxt) {
    const std::size_t q = machine.state_count();
    std::fill(cur.begin(), cur.end(), 0);
    cur[machine.start()] = 1;
    std::size_t next_dot = 0;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const bool dot = next_dot < pattern.size() && pattern[next_dot] == pos;
        if (dot)
            ++next_dot;
        const auto &columns = dot ? marked : plain;
        std::fill(nxt.begin(), nxt.end(), 0);
        for (std::size_t s = 0; s < q; ++s) {
            if (cur[s] == 0)
                continue;
            for (std::size_t c : columns)
                nxt[machine.next(static_cast<Dfa::State>(s), c)] += cur[s];
        }
        std::swap(cur, nxt);
    }
    std::uint64_t accepted = 0;
    for (std::size_t s = 0; s < q; ++s)
        if (machine.accepting(static_cast<Dfa::State>(s)))
            accepted += cur[s];
    return accepted;
}

} // namespace

RecognitionReport check_recognition(const AdvisedMachine &am, const LanguageOracle &oracle,
                                    std::size_t max_len) {
    require_alphabet(am, oracle);
    const bool randomized = std::holds_alternative<RandomizedInkdotAdvice>(am.advice);
    const Probability two_thirds(2, 3);
    const Probability one_third(1, 3);

    RecognitionReport report;
    report.max_len = max_len;
    for (std::size_t n = 1; n <= max_len && report.agree; ++n) {
        const WordEvaluator eval = bind_length(am, n);
        for_each_word_until(oracle.alphabet, n, [&](const std::string &w) {
            ++report.strings_checked;
            const Probability p = eval(w);
            const bool member = oracle.member(w);
            const bool correct = randomized ? (member ? p >= two_thirds : p <= one_third)
                                            : (p == Probability(member ? 1 : 0));
            if (correct)
                return true;
            report.agree = false;
            report.counterexample = Counterexample{w, describe_advice(am.advice, n), p, member};
            return false;
        });
    }
    return report;
}

Probability acceptance_probability(const Dfa &machine, const RandomizedInkdotAdvice &advice,
                                   std::string_view word) {
    const std::size_t n = word.size();
    if (auto problems = validate_randomized(advice, n); !problems.empty())
        throw AdviceMismatchError("invalid advice distribution at length " + std::to_string(n) +
                                  ": " + problems.front());
    Probability p = 0;
    for (const auto &wp : advice(n))
        if (wp.p != Probability(0) && run_dfa(machine, apply_inkdots(word, InkdotPattern(n, wp.positions))))
            p += wp.p;
    return p;
}

Probability max_error(const AdvisedMachine &am, const LanguageOracle &oracle,
                      std::size_t max_len) {
    require_alphabet(am, oracle);
    Probability worst = 0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        const WordEvaluator eval = bind_length(am, n);
        for_each_word(oracle.alphabet, n, [&](const std::string &w) {
            const Probability p = eval(w);
            const Probability err = oracle.member(w) ? Probability(1) - p : p;
            worst = std::max(worst, err);
        });
    }
    return worst;
}

// DFA enumeration

DfaEnumerator::DfaEnumerator(std::size_t states, std::string bases, bool dotted,
                             std::uint64_t ceiling)
    : states_(states) {
    for (char c : bases) {
        alphabet_.push_back({c, false});
        if (dotted)
            alphabet_.push_back({c, true});
    }
    if (states == 0)
        return;
    tables_ = sat_pow(states, states * alphabet_.size());
    size_ = sat_mul(tables_, sat_pow(2, states));
    if (size_ > ceiling)
        throw SearchRefused(size_, ceiling,
                            "enumerating " + std::to_string(states) + "-state machines needs " +
                                (size_ == kSaturated ? std::string("more than 2^64")
                                                     : std::to_string(size_)) +
                                " machines, above the ceiling of " + std::to_string(ceiling));
}

Dfa DfaEnumerator::at(std::uint64_t index) const {
    if (index >= size_)
        throw PreconditionError("machine index " + std::to_string(index) + " out of range");
    std::uint64_t table_index = index % tables_;
    std::uint64_t accept_index = index / tables_;
    std::vector<Dfa::State> table(states_ * alphabet_.size());
    for (auto &cell : table) {
        cell = static_cast<Dfa::State>(table_index % states_);
        table_index /= states_;
    }
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (std::size_t s = 0; s < states_; ++s) {
        names.push_back("q" + std::to_string(s));
        accepting.push_back((accept_index >> s) & 1u);
    }
    return Dfa(std::move(names), 0, std::move(accepting), alphabet_, std::move(table));
}

// Separation search

std::uint64_t separation_search_size(std::size_t alphabet_size, std::size_t q, std::size_t b,
                                     std::size_t max_len) {
    const std::uint64_t machines =
        q == 0 ? 0 : sat_mul(sat_pow(q, q * 2 * alphabet_size), sat_pow(2, q));
    std::uint64_t per_machine = 0;
    for (std::size_t n = 1; n <= max_len; ++n)
        per_machine = sat_add(per_machine,
                              sat_mul(patterns_up_to(n, b), sat_pow(alphabet_size, n)));
    return sat_mul(machines, per_machine);
}

SeparationCertificate search_separation(const LanguageOracle &oracle, std::size_t q,
                                        std::size_t b, std::size_t max_len,
                                        std::uint64_t ceiling, unsigned jobs) {
    SeparationCertificate cert;
    cert.oracle = oracle.name;
    cert.q = q;
    cert.b = b;
    cert.max_len = max_len;
    cert.tuple_space = separation_search_size(oracle.alphabet.size(), q, b, max_len);
    for (std::size_t n = 1; n <= max_len; ++n)
        cert.patterns_per_length.push_back(patterns_up_to(n, b));
    if (cert.tuple_space > ceiling)
        throw SearchRefused(cert.tuple_space, ceiling,
                            "separation search for " + oracle.name + " needs " +
                                std::to_string(cert.tuple_space) +
                                " (machine, length, pattern, word) tuples, above the ceiling of " +
                                std::to_string(ceiling));

    const DfaEnumerator machines(q, oracle.alphabet, true, kSaturated);
    cert.machine_space = machines.size();

    std::vector<SearchLength> lengths;
    for (std::size_t n = 1; n <= max_len; ++n) {
        SearchLength len;
        len.n = n;
        len.members = oracle.members_of_length(n);
        len.member_count = len.members.size();
        for_each_pattern_until(n, b, [&](const std::vector<std::size_t> &p) {
            len.patterns.push_back(p);
            return true;
        });
        lengths.push_back(std::move(len));
    }
    std::vector<std::size_t> plain, marked;
    for (std::size_t c = 0; c < machines.alphabet().size(); ++c)
        (machines.alphabet()[c].marked ? marked : plain).push_back(c);

    // Index of the first successful pattern per length, or nullopt.
    auto witness_patterns =
        [&](const Dfa &machine) -> std::optional<std::vector<std::size_t>> {
        std::vector<std::uint64_t> cur(q), nxt(q);
        std::vector<std::size_t> chosen;
        for (const auto &len : lengths) {
            bool found = false;
            for (std::size_t pi = 0; pi < len.patterns.size() && !found; ++pi) {
                const auto &pattern = len.patterns[pi];
                if (count_accepted(machine, plain, marked, len.n, pattern, cur, nxt) !=
                    len.member_count)
                    continue;
                const InkdotPattern dots(len.n, pattern);
                found = std::all_of(len.members.begin(), len.members.end(),
                                    [&](const std::string &w) {
                                        return run_dfa(machine, apply_inkdots(w, dots));
                                    });
                if (found)
                    chosen.push_back(pi);
            }
            if (!found)
                return std::nullopt;
        }
        return chosen;
    };

    const std::uint64_t total = machines.size();
    std::atomic<std::uint64_t> best{total};
    auto worker = [&](unsigned id, unsigned stride) {
        for (std::uint64_t i = id; i < total; i += stride) {
            if (i >= best.load(std::memory_order_relaxed))
                return;
            if (witness_patterns(machines.at(i))) {
                std::uint64_t seen = best.load();
                while (i < seen && !best.compare_exchange_weak(seen, i)) {
                }
                return;
            }
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || total < 2) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker, t, jobs);
        for (auto &th : pool)
            th.join();
    }

    const std::uint64_t winner = best.load();
    if (winner < total) {
        Dfa machine = machines.at(winner);
        const auto chosen = *witness_patterns(machine);
        for (std::size_t i = 0; i < lengths.size(); ++i)
            cert.witness_advice.emplace_back(lengths[i].n, lengths[i].patterns[chosen[i]]);
        cert.witness_found = true;
        cert.witness = std::move(machine);
        cert.machines_searched = winner + 1;
    } else {
        cert.machines_searched = total;
    }
    return cert;
}

// Equivalence classes

std::uint64_t myhill_nerode_index(const LanguageOracle &oracle, std::size_t word_len,
                                  std::size_t ext_len, std::uint64_t ceiling) {
    const std::size_t sigma = oracle.alphabet.size();
    std::uint64_t suffixes = 0;
    for (std::size_t e = 0; e <= ext_len; ++e)
        suffixes = sat_add(suffixes, sat_pow(sigma, e));
    const std::uint64_t cost = sat_mul(sat_pow(sigma, word_len), suffixes);
    if (cost > ceiling)
        throw SearchRefused(cost, ceiling,
                            "index computation needs " + std::to_string(cost) +
                                " membership queries, above the ceiling of " +
                                std::to_string(ceiling));

    std::vector<std::string> tails;
    for (std::size_t e = 0; e <= ext_len; ++e)
        for_each_word(oracle.alphabet, e, [&](const std::string &z) { tails.push_back(z); });
    std::set<std::vector<bool>> classes;
    for_each_word(oracle.alphabet, word_len, [&](const std::string &x) {
        std::vector<bool> signature;
        signature.reserve(tails.size());
        for (const auto &z : tails)
            signature.push_back(oracle.member(x + z));
        classes.insert(std::move(signature));
    });
    return classes.size();
}

EquivalenceClassReport fact1_class_count(const LanguageOracle &oracle, std::size_t max_len,
                                         std::uint64_t ceiling) {
    const std::size_t sigma = oracle.alphabet.size();
    std::uint64_t cost = 0;
    for (std::size_t n = 1; n <= max_len; ++n)
        cost = sat_add(cost, sat_mul(n + 1, sat_pow(sigma, n)));
    if (cost > ceiling)
        throw SearchRefused(cost, ceiling,
                            "class count needs " + std::to_string(cost) +
                                " membership queries, above the ceiling of " +
                                std::to_string(ceiling));

    EquivalenceClassReport report;
    report.max_len = max_len;
    for (std::size_t n = 1; n <= max_len; ++n) {
        for (std::size_t l = 0; l <= n; ++l) {
            std::vector<std::string> tails;
            for_each_word(oracle.alphabet, n - l, [&](const std::string &z) { tails.push_back(z); });
            std::set<std::vector<bool>> classes;
            for_each_word(oracle.alphabet, l, [&](const std::string &x) {
                std::vector<bool> signature;
                signature.reserve(tails.size());
                for (const auto &z : tails)
                    signature.push_back(oracle.member(x + z));
                classes.insert(std::move(signature));
            });
            report.groups.push_back({n, l, classes.size()});
            report.max_group_count =
                std::max<std::uint64_t>(report.max_group_count, classes.size());
        }
    }
    return report;
}

} // namespace advlab
