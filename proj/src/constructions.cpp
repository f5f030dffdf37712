#include "advlab/constructions.hpp"

#include <charconv>
#include <deque>
#include <map>

#include "advlab/error.hpp"

namespace advlab {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::vector<DottedSymbol> dotted_alphabet(std::string_view bases) {
    std::vector<DottedSymbol> out;
    for (char c : bases) {
        out.push_back({c, false});
        out.push_back({c, true});
    }
    return out;
}

std::vector<DottedSymbol> plain_alphabet(std::string_view bases) {
    std::vector<DottedSymbol> out;
    for (char c : bases)
        out.push_back({c, false});
    return out;
}

unsigned parse_param(std::string_view text, std::string_view whole) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw UnknownNameError("cannot parse parameter in '" + std::string(whole) + "'");
    return v;
}

std::size_t min_budget(std::size_t dots, std::size_t n) { return dots < n ? dots : n; }

} // namespace

std::size_t state_count(const Machine &machine) {
    return std::visit([](const auto &m) { return m.state_count(); }, machine);
}

std::string input_alphabet(const Machine &machine) {
    return std::visit(overloaded{
                          [](const Dfa &m) { return m.base_alphabet(); },
                          [](const OneWayTm &m) {
                              std::string out;
                              for (const auto &a : m.input_alphabet())
                                  if (out.find(a.base) == std::string::npos)
                                      out.push_back(a.base);
                              return out;
                          },
                          [](const TrackDfa &m) { return m.input_alphabet(); },
                      },
                      machine);
}

WordEvaluator bind_length(const AdvisedMachine &am, std::size_t n) {
    using Run = std::function<bool(const DottedWord &)>;
    auto check_length = [n](std::string_view word) {
        if (word.size() != n)
            throw AdviceMismatchError("word of length " + std::to_string(word.size()) +
                                      " evaluated with advice for length " + std::to_string(n));
    };
    auto deterministic = [check_length](Run run, InkdotPattern pattern) -> WordEvaluator {
        return [=](std::string_view word) {
            check_length(word);
            return Probability(run(apply_inkdots(word, pattern)) ? 1 : 0);
        };
    };

    if (const auto *track = std::get_if<TrackDfa>(&am.machine)) {
        std::string bits;
        if (const auto *a = std::get_if<TrackAdvice>(&am.advice))
            bits = (*a)(n);
        else if (const auto *a = std::get_if<InkdotAdvice>(&am.advice))
            bits = pattern_to_track((*a)(n));
        else
            throw PreconditionError(am.name + ": track machines take track or inkdot advice");
        return [machine = *track, bits](std::string_view word) {
            return Probability(run_track(machine, word, bits) ? 1 : 0);
        };
    }

    Run run;
    if (const auto *dfa = std::get_if<Dfa>(&am.machine))
        run = [machine = *dfa](const DottedWord &w) { return run_dfa(machine, w); };
    else
        run = [machine = std::get<OneWayTm>(am.machine)](const DottedWord &w) {
            return run_tm(machine, w).accepted;
        };

    return std::visit(
        overloaded{
            [&](const PrefixAdvice &a) -> WordEvaluator {
                const std::string prefix = a(n);
                return [=](std::string_view word) {
                    check_length(word);
                    return Probability(run(undotted(prefix + std::string(word))) ? 1 : 0);
                };
            },
            [&](const TrackAdvice &a) -> WordEvaluator {
                if (a.alphabet_size() != 2)
                    throw PreconditionError(am.name + ": only binary tracks can be read as inkdots");
                return deterministic(run, track_to_pattern(a(n)));
            },
            [&](const InkdotAdvice &a) -> WordEvaluator { return deterministic(run, a(n)); },
            [&](const RandomizedInkdotAdvice &a) -> WordEvaluator {
                if (auto problems = validate_randomized(a, n); !problems.empty())
                    throw AdviceMismatchError(am.name + ": " + problems.front());
                std::vector<std::pair<InkdotPattern, Probability>> outcomes;
                for (const auto &wp : a(n))
                    if (wp.p != Probability(0))
                        outcomes.emplace_back(InkdotPattern(n, wp.positions), wp.p);
                return [=](std::string_view word) {
                    check_length(word);
                    Probability p = 0;
                    for (const auto &[pattern, weight] : outcomes)
                        if (run(apply_inkdots(word, pattern)))
                            p += weight;
                    return p;
                };
            },
        },
        am.advice);
}

Probability acceptance_probability(const AdvisedMachine &am, std::string_view word) {
    return bind_length(am, word.size())(word);
}

bool accepts(const AdvisedMachine &am, std::string_view word) {
    if (std::holds_alternative<RandomizedInkdotAdvice>(am.advice))
        throw PreconditionError(am.name + ": randomized advice has no single verdict");
    return acceptance_probability(am, word) == Probability(1);
}

// Prefix advice -> one inkdot

AdvisedMachine prefix_to_inkdot(const Dfa &machine, std::size_t k, const PrefixAdvice &advice) {
    if (k > kMaxPrefixBits)
        throw PreconditionError("prefix_to_inkdot: k = " + std::to_string(k) +
                                " exceeds the state-blowup guard of " +
                                std::to_string(kMaxPrefixBits));
    if (advice.length() != k)
        throw AdviceMismatchError("prefix_to_inkdot: advice strings have length " +
                                  std::to_string(advice.length()) + ", expected " +
                                  std::to_string(k));
    const std::string bases = machine.base_alphabet();
    for (char c : bases)
        if (!machine.column({c, false}))
            throw PreconditionError("prefix_to_inkdot: machine must read unmarked symbols");
    if (bases.find('0') == std::string::npos || bases.find('1') == std::string::npos)
        throw PreconditionError("prefix_to_inkdot: machine must read the advice bits 0 and 1");

    const auto alphabet = dotted_alphabet(bases);

    if (k == 0) {
        Dfa lifted = Dfa::from_rule(machine.state_names(), machine.start(),
                                    machine.accepting_set(), alphabet,
                                    [&](Dfa::State s, DottedSymbol a) {
                                        return machine.next(s, DottedSymbol{a.base, false});
                                    });
        InkdotAdvice none([](std::size_t) { return std::size_t{0}; },
                          [](std::size_t n) { return InkdotPattern::empty(n); });
        return {"prefix_to_inkdot(k=0)", std::move(lifted), std::move(none), ""};
    }

    const std::size_t copies = std::size_t{1} << k;
    std::vector<Dfa::State> instance_starts(copies);
    for (std::size_t b = 0; b < copies; ++b) {
        std::string bits(k, '0');
        for (std::size_t j = 0; j < k; ++j)
            if ((b >> (k - 1 - j)) & 1u)
                bits[j] = '1';
        instance_starts[b] = final_state(machine, undotted(bits));
    }

    // Before the dot: the input read so far (lookup key) and the state of
    // every simulated copy. After the dot: the chosen copy alone.
    struct Pending {
        std::string prefix;
        std::vector<Dfa::State> copies;
    };
    std::vector<std::string> names;
    std::vector<bool> accepting;
    std::map<std::string, Dfa::State> before;
    std::vector<Dfa::State> after(machine.state_count(), UINT32_MAX);
    std::deque<std::pair<Dfa::State, Pending>> queue;

    auto add_before = [&](Pending p) {
        if (auto it = before.find(p.prefix); it != before.end())
            return it->second;
        const auto id = static_cast<Dfa::State>(names.size());
        names.push_back("pre:" + p.prefix);
        const std::string full = advice(p.prefix.size()) + p.prefix;
        accepting.push_back(run_dfa(machine, undotted(full)));
        before.emplace(p.prefix, id);
        queue.emplace_back(id, std::move(p));
        return id;
    };
    const Dfa::State reject = [&] {
        names.push_back("reject");
        accepting.push_back(false);
        return static_cast<Dfa::State>(names.size() - 1);
    }();
    std::vector<Dfa::State> committed;
    auto add_after = [&](Dfa::State q) {
        if (after[q] == UINT32_MAX) {
            after[q] = static_cast<Dfa::State>(names.size());
            committed.push_back(q);
            names.push_back("run:" + machine.state_name(q));
            accepting.push_back(machine.accepting(q));
        }
        return after[q];
    };

    std::vector<std::vector<Dfa::State>> rows;
    auto set_row = [&](Dfa::State id, std::vector<Dfa::State> row) {
        if (rows.size() <= id)
            rows.resize(id + 1);
        rows[id] = std::move(row);
    };

    const Dfa::State root = add_before({"", instance_starts});
    set_row(reject, std::vector<Dfa::State>(alphabet.size(), reject));
    while (!queue.empty()) {
        auto [id, node] = std::move(queue.front());
        queue.pop_front();
        std::vector<Dfa::State> row;
        for (const auto &a : alphabet) {
            const DottedSymbol plain{a.base, false};
            if (a.marked) {
                // The dot sits on position b+1, so copy b = |prefix| is chosen.
                row.push_back(add_after(machine.next(node.copies[node.prefix.size()], plain)));
            } else if (node.prefix.size() + 1 < copies) {
                Pending next{node.prefix + a.base, node.copies};
                for (auto &q : next.copies)
                    q = machine.next(q, plain);
                row.push_back(add_before(std::move(next)));
            } else {
                row.push_back(reject);
            }
        }
        set_row(id, std::move(row));
    }
    for (std::size_t i = 0; i < committed.size(); ++i) {
        const Dfa::State q = committed[i];
        std::vector<Dfa::State> row;
        for (const auto &a : alphabet)
            row.push_back(add_after(machine.next(q, DottedSymbol{a.base, false})));
        set_row(after[q], std::move(row));
    }

    std::vector<Dfa::State> table;
    for (const auto &row : rows)
        table.insert(table.end(), row.begin(), row.end());
    Dfa simulator(std::move(names), root, std::move(accepting), alphabet, std::move(table));

    InkdotAdvice dots(
        [copies](std::size_t n) { return n >= copies ? std::size_t{1} : std::size_t{0}; },
        [advice, copies, k](std::size_t n) {
            if (n < copies)
                return InkdotPattern::empty(n);
            const std::string bits = advice(n);
            std::size_t b = 0;
            for (std::size_t j = 0; j < k; ++j)
                b = b * 2 + static_cast<std::size_t>(bits[j] - '0');
            return InkdotPattern(n, {b + 1});
        });
    return {"prefix_to_inkdot(k=" + std::to_string(k) + ")", std::move(simulator),
            std::move(dots), ""};
}

// Alternating segments

AdvisedMachine segments_recognizer(unsigned m) {
    if (m == 0)
        throw PreconditionError("segments_recognizer: m must be positive");
    const std::size_t period = m + 1;
    // 0: nothing read; 1 + last*period + (length mod period); then reject.
    const Dfa::State reject = static_cast<Dfa::State>(1 + 2 * period);
    std::vector<std::string> names{"start"};
    std::vector<bool> accepting{false};
    for (char last : {'0', '1'})
        for (std::size_t r = 0; r < period; ++r) {
            names.push_back(std::string("last") + last + ".mod" + std::to_string(r));
            accepting.push_back(r == 0);
        }
    names.push_back("reject");
    accepting.push_back(false);
    auto state_of = [period](char last, std::size_t r) {
        return static_cast<Dfa::State>(1 + (last == '1' ? period : 0) + r % period);
    };

    Dfa machine = Dfa::from_rule(
        std::move(names), 0, std::move(accepting), dotted_alphabet("01"),
        [&](Dfa::State s, DottedSymbol a) -> Dfa::State {
            if (s == reject)
                return reject;
            if (s == 0)
                return a.base == '0' && !a.marked ? state_of('0', 1) : reject;
            const char last = s - 1 < period ? '0' : '1';
            const std::size_t r = (s - 1) % period;
            const bool changed = a.base != last;
            if (changed != a.marked)
                return reject;
            return state_of(a.base, r + 1);
        });
    InkdotAdvice advice([m](std::size_t n) { return min_budget(m, n); },
                        [m](std::size_t n) { return segments_advice(m, n); });
    return {"Lm:" + std::to_string(m), std::move(machine), std::move(advice),
            "Lm:" + std::to_string(m)};
}

AdvisedMachine spaced_ones_recognizer(const GrowthFunction &f) {
    Dfa machine = Dfa::from_rule({"ok", "reject"}, 0, {true, false}, dotted_alphabet("01"),
                                 [](Dfa::State s, DottedSymbol a) -> Dfa::State {
                                     if (s == 1)
                                         return 1;
                                     return (a.base == '1') == a.marked ? 0 : 1;
                                 });
    InkdotAdvice advice(
        [f](std::size_t n) { return n == 0 ? std::size_t{0} : min_budget(f(n), n); },
        [f](std::size_t n) { return spaced_ones_advice(f, n); });
    return {"Lf:" + f.name, std::move(machine), std::move(advice), "Lf:" + f.name};
}

// Residue bit

AdvisedMachine residue_prefix_machine(unsigned k) {
    if (k < 2)
        throw PreconditionError("residue_prefix_machine: k must be at least 2");
    // q0..qk, then qA = k+1, qR = k+2.
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (unsigned j = 0; j <= k; ++j) {
        names.push_back("q" + std::to_string(j));
        accepting.push_back(true);
    }
    names.push_back("qA");
    accepting.push_back(true);
    names.push_back("qR");
    accepting.push_back(false);
    const Dfa::State qa = k + 1;
    const Dfa::State qr = k + 2;
    Dfa machine = Dfa::from_rule(std::move(names), 0, std::move(accepting), plain_alphabet("01"),
                                 [&](Dfa::State s, DottedSymbol a) -> Dfa::State {
                                     if (s == qa || s == qr)
                                         return s;
                                     if (s == 0)
                                         return a.base == '1' ? 1 : 0;
                                     if (s < k)
                                         return s + 1;
                                     return a.base == '1' ? qa : qr;
                                 });
    PrefixAdvice advice(k, [k](std::size_t n) { return residue_bit_prefix_advice(k, n); });
    return {"LANGk-prefix:" + std::to_string(k), std::move(machine), std::move(advice),
            "LANGk:" + std::to_string(k)};
}

Dfa dot_on_one_checker() {
    return Dfa::from_rule({"q0", "qR"}, 0, {true, false}, dotted_alphabet("01"),
                          [](Dfa::State s, DottedSymbol a) -> Dfa::State {
                              if (s == 1)
                                  return 1;
                              return a.marked && a.base == '0' ? 1 : 0;
                          });
}

AdvisedMachine residue_inkdot_machine(unsigned k) {
    if (k < 2)
        throw PreconditionError("residue_inkdot_machine: k must be at least 2");
    InkdotAdvice advice([](std::size_t n) { return min_budget(1, n); },
                        [k](std::size_t n) { return residue_bit_inkdot_advice(k, n); });
    return {"LANGk-dot:" + std::to_string(k), dot_on_one_checker(), std::move(advice),
            "LANGk:" + std::to_string(k)};
}

// Randomized border dots for the four-segment language

AdvisedMachine randomized_four_segments() {
    // 0: start; 1 + (phase-1)*4 + (length mod 4) for phases 1..4; 17: reject.
    constexpr Dfa::State reject = 17;
    std::vector<std::string> names{"start"};
    std::vector<bool> accepting{false};
    for (int phase = 1; phase <= 4; ++phase)
        for (int r = 0; r < 4; ++r) {
            names.push_back("seg" + std::to_string(phase) + ".mod" + std::to_string(r));
            accepting.push_back(phase == 4 && r == 0);
        }
    names.push_back("reject");
    accepting.push_back(false);

    Dfa machine = Dfa::from_rule(
        std::move(names), 0, std::move(accepting), dotted_alphabet("01"),
        [](Dfa::State s, DottedSymbol a) -> Dfa::State {
            if (s == reject)
                return reject;
            if (s == 0)
                return a.base == '0' && !a.marked ? 1 + 1 : reject;
            const int phase = static_cast<int>((s - 1) / 4) + 1;
            const int r = static_cast<int>((s - 1) % 4);
            const char last = phase % 2 ? '0' : '1';
            const bool changed = a.base != last;
            if (a.marked && !changed)
                return reject;
            int next_phase = phase;
            if (changed) {
                if (phase == 4)
                    return reject;
                next_phase = phase + 1;
            }
            return static_cast<Dfa::State>(1 + (next_phase - 1) * 4 + (r + 1) % 4);
        });

    RandomizedInkdotAdvice advice(
        [](std::size_t n) { return min_budget(2, n); },
        [](std::size_t n) {
            if (n == 0 || n % 4 != 0)
                return PatternDistribution{{{}, Probability(1)}};
            const std::size_t m = n / 4;
            const Probability third(1, 3);
            return PatternDistribution{{{m + 1, 2 * m + 1}, third},
                                       {{m + 1, 3 * m + 1}, third},
                                       {{2 * m + 1, 3 * m + 1}, third}};
        });
    return {"L3rand", std::move(machine), std::move(advice), "Lm:3"};
}

AdvisedMachine drift_tm(const GrowthFunction &g) {
    InkdotAdvice advice([](std::size_t n) { return min_budget(1, n); },
                        [g](std::size_t n) { return drift_advice(g, n); });
    return {"Lg:" + g.name, build_drift_machine(), std::move(advice), "Lg:" + g.name};
}

// Seeded language on a k-ary advice track

AdvisedMachine seeded_track_recognizer(const BinarySeed &seed, unsigned k, std::string oracle) {
    if (k < 3 || k > 10)
        throw PreconditionError("seeded_track_recognizer: k must be in [3, 10]");
    std::string digits;
    for (unsigned d = 0; d < k; ++d)
        digits.push_back(static_cast<char>('0' + d));
    // start, matching, dead; the empty word has no member to match.
    std::vector<TrackDfa::State> table;
    for (TrackDfa::State s = 0; s < 3; ++s)
        for (unsigned a = 0; a < k; ++a)
            for (unsigned d = 0; d < k; ++d)
                table.push_back(s < 2 && a == d ? 1 : 2);
    TrackDfa machine(digits, k, 0, {false, true, false}, std::move(table));
    TrackAdvice advice(k, [seed, k](std::size_t n) {
        return n == 0 ? std::string() : seeded_member(seed, k, n);
    });
    return {oracle, std::move(machine), std::move(advice), oracle};
}

std::string decompress(const TrackDfa &machine, std::span<const std::string> advice, unsigned k,
                       bool check_unique) {
    std::string digits;
    for (unsigned d = 0; d < k; ++d)
        digits.push_back(static_cast<char>('0' + d));
    for (char d : digits)
        if (machine.input_alphabet().find(d) == std::string::npos)
            throw PreconditionError("decompress: machine does not read base-" +
                                    std::to_string(k) + " digits");

    std::string result;
    for (std::size_t i = 1; i <= advice.size(); ++i) {
        const std::string &track = advice[i - 1];
        if (track.size() != i)
            throw AdviceMismatchError("decompress: advice " + std::to_string(i) + " has length " +
                                      std::to_string(track.size()));
        std::optional<std::string> found;
        for_each_word_until(digits, i, [&](const std::string &s) {
            if (!run_track(machine, s, track))
                return true;
            if (found)
                throw PreconditionError("decompress: advice " + std::to_string(i) +
                                        " admits both " + *found + " and " + s);
            found = s;
            return check_unique;
        });
        if (!found)
            throw DecodeFailure(i, "decompress: no string of length " + std::to_string(i) +
                                       " is accepted");
        result += translate_to_binary(*found, k, seeded_chunk_length(k, i));
    }
    return result;
}

// Registry

AdvisedMachine build_by_name(std::string_view name, std::uint64_t default_seed) {
    const auto colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view arg =
        colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);

    if (head == "Lm" && !arg.empty())
        return segments_recognizer(parse_param(arg, name));
    if (head == "Lf" && !arg.empty())
        return spaced_ones_recognizer(growth_by_name(arg));
    if (head == "LANGk-prefix" && !arg.empty())
        return residue_prefix_machine(parse_param(arg, name));
    if (head == "LANGk-dot" && !arg.empty())
        return residue_inkdot_machine(parse_param(arg, name));
    if (name == "L3rand")
        return randomized_four_segments();
    if (head == "Lg" && !arg.empty())
        return drift_tm(growth_by_name(arg));
    if (head == "Lw") {
        const auto params = parse_seeded_name(name, default_seed);
        return seeded_track_recognizer(BinarySeed::splitmix(params.seed), params.k,
                                       "Lw:k=" + std::to_string(params.k) +
                                           ",seed=" + std::to_string(params.seed));
    }
    throw UnknownNameError("unknown builder '" + std::string(name) + "'");
}

std::string default_builder_for(std::string_view oracle_name) {
    const auto oracle = oracle_by_name(oracle_name);
    const std::string_view canonical = oracle.name;
    if (canonical.starts_with("LANGk:"))
        return "LANGk-dot:" + std::string(canonical.substr(6));
    if (canonical.starts_with("Lm:") || canonical.starts_with("Lf:") ||
        canonical.starts_with("Lg:"))
        return std::string(canonical);
    if (canonical.starts_with("Lw:"))
        return std::string(oracle_name);
    throw UnknownNameError("no builder is registered for oracle '" + std::string(oracle_name) +
                           "'");
}

} // namespace advlab
