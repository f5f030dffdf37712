#include "advlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "advlab/error.hpp"

namespace advlab {

namespace {

constexpr std::size_t kDemoAdviceLength = 16;

std::string join(const std::vector<std::string> &parts, const char *sep = ", ") {
    std::string out;
    for (const auto &p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T> std::optional<T> optional_field(const Json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null())
        return std::nullopt;
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("config field '") + key + "': " + e.what());
    }
}

Json optional_json(const std::optional<std::size_t> &v) {
    return v ? Json(*v) : Json(nullptr);
}

// Exhaustive flip check: every dotted word of length <= max_len against the
// flipped machine on the same word with every mark toggled.
bool flip_invariant(const Dfa &machine, std::size_t max_len, std::uint64_t &checked) {
    const Dfa flipped = flip_machine(machine);
    const auto &alphabet = machine.alphabet();
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::vector<std::size_t> digits(n, 0);
        DottedWord word(n), toggled(n);
        while (true) {
            for (std::size_t i = 0; i < n; ++i) {
                word[i] = alphabet[digits[i]];
                toggled[i] = {word[i].base, !word[i].marked};
            }
            ++checked;
            if (run_dfa(machine, word) != run_dfa(flipped, toggled))
                return false;
            std::size_t i = 0;
            while (i < n && ++digits[i] == alphabet.size())
                digits[i++] = 0;
            if (i == n)
                break;
        }
    }
    return true;
}

/// Member of the drift language of length n whose 1 bounces between the
/// ends of each subword.
std::string bouncing_drift_member(const GrowthFunction &g, std::size_t n) {
    const std::size_t width = g(n);
    const std::size_t subwords = n / (width + 1);
    std::string w;
    std::size_t pos = 1;
    int step = 1;
    for (std::size_t i = 0; i < subwords; ++i) {
        std::string sub(width, '0');
        sub[pos - 1] = '1';
        w += sub + "#";
        if (width > 1) {
            if ((step > 0 && pos == width) || (step < 0 && pos == 1))
                step = -step;
            pos += step;
        }
    }
    w.append(n - w.size(), '#');
    return w;
}

struct Suite {
    const ExperimentConfig &config;
    std::vector<ReportRow> rows;

    void add(std::string id, std::string group, std::string locus, std::string expected,
             std::string observed, bool pass) {
        rows.push_back({std::move(id), std::move(group), std::move(locus), std::move(expected),
                        std::move(observed), pass});
    }

    void segments_upper_bound() {
        std::vector<std::string> seen;
        bool pass = true;
        for (unsigned m = 1; m <= 3; ++m) {
            const auto r = check_recognition(segments_recognizer(m), segments_oracle(m), 12);
            pass = pass && r.agree && r.strings_checked == 8190;
            seen.push_back("m=" + std::to_string(m) + ": " + (r.agree ? "agree" : "disagree") +
                           " on " + std::to_string(r.strings_checked));
        }
        add("AC-1", "constant inkdots", "segment language recognized with m inkdots",
            "agreement on 8190 strings for each m in {1,2,3}", join(seen), pass);
    }

    void segments_lower_bound() {
        const auto big = search_separation(segments_oracle(3), 2, 2, 10, config.ceiling,
                                           config.jobs);
        const auto small = search_separation(segments_oracle(1), 1, 0, 6, config.ceiling,
                                             config.jobs);
        add("AC-2", "constant inkdots", "segment language needs more inkdots or states",
            "none_exists for (Lm:3, q=2, b=2, N=10) and (Lm:1, q=1, b=0, N=6)",
            std::string(big.witness_found ? "witness" : "none_exists") + " after " +
                std::to_string(big.machines_searched) + " machines; " +
                (small.witness_found ? "witness" : "none_exists") + " after " +
                std::to_string(small.machines_searched) + " machines",
            !big.witness_found && !small.witness_found);
    }

    void prefix_simulation() {
        std::mt19937_64 rng(config.seed);
        constexpr std::size_t kSamples = 60;
        constexpr std::size_t kMaxLen = 8;
        std::size_t agreeing = 0;
        std::uint64_t words = 0;
        for (std::size_t sample = 0; sample < kSamples; ++sample) {
            const std::size_t q = 1 + rng() % 3;
            const std::size_t k = rng() % 3;
            std::vector<std::string> names;
            std::vector<bool> accepting;
            for (std::size_t s = 0; s < q; ++s) {
                names.push_back("s" + std::to_string(s));
                accepting.push_back(rng() & 1u);
            }
            std::vector<Dfa::State> table(q * 2);
            for (auto &t : table)
                t = static_cast<Dfa::State>(rng() % q);
            const Dfa machine(names, 0, accepting, {{'0', false}, {'1', false}}, table);
            std::vector<std::string> prefixes(kConstructionCheckBound + 1);
            for (auto &p : prefixes) {
                p.clear();
                for (std::size_t j = 0; j < k; ++j)
                    p.push_back(rng() & 1u ? '1' : '0');
            }
            const PrefixAdvice advice(k, [prefixes](std::size_t n) {
                return prefixes[std::min(n, prefixes.size() - 1)];
            });
            const auto simulated = prefix_to_inkdot(machine, k, advice);
            bool ok = true;
            for (std::size_t n = 0; n <= kMaxLen && ok; ++n) {
                const auto eval = bind_length(simulated, n);
                for_each_word_until("01", n, [&](const std::string &w) {
                    ++words;
                    ok = (eval(w) == Probability(1)) == run_dfa(machine, advice(n) + w);
                    return ok;
                });
            }
            agreeing += ok;
        }
        add("AC-3", "prefix advice", "k prefix bits simulated by one inkdot",
            "all 60 sampled machines (q <= 3, k <= 2) agree on every input of length <= 8",
            std::to_string(agreeing) + "/" + std::to_string(kSamples) + " agree over " +
                std::to_string(words) + " words",
            agreeing == kSamples);
    }

    void track_round_trip() {
        std::uint64_t checked = 0;
        bool pass = true;
        for (std::size_t n = 0; n <= 16; ++n) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<std::size_t> positions;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1u)
                        positions.push_back(i + 1);
                const InkdotPattern p(n, positions);
                const std::string track = pattern_to_track(p);
                pass = pass && track_to_pattern(track) == p &&
                       pattern_to_track(track_to_pattern(track)) == track;
                ++checked;
            }
        }
        add("AC-4", "advice tracks", "inkdots and binary advice tracks are interchangeable",
            "identity on all 131071 patterns with n <= 16",
            "identity on " + std::to_string(checked) + " patterns", pass && checked == 131071);
    }

    void residue_index() {
        std::vector<std::string> seen;
        bool pass = true;
        for (unsigned k = 2; k <= 4; ++k) {
            const auto index = myhill_nerode_index(residue_bit_oracle(k), k, 2 * k,
                                                   config.ceiling);
            pass = pass && index >= (1u << k);
            seen.push_back("k=" + std::to_string(k) + ": " + std::to_string(index));
        }
        add("AC-5", "succinctness", "residue-bit language needs 2^k states without advice",
            "index >= 2^k for k in {2,3,4}", join(seen), pass);
    }

    void residue_prefix() {
        std::vector<std::string> seen;
        bool pass = true;
        for (unsigned k = 2; k <= 4; ++k) {
            const auto am = residue_prefix_machine(k);
            const auto r = check_recognition(am, residue_bit_oracle(k), 14);
            const auto states = state_count(am.machine);
            pass = pass && r.agree && states == k + 3;
            seen.push_back("k=" + std::to_string(k) + ": " + std::to_string(states) +
                           " states, " + (r.agree ? "agree" : "disagree"));
        }
        add("AC-6", "succinctness", "k+3 states with k bits of prefix advice",
            "k+3 states and agreement on lengths <= 14 for k in {2,3,4}", join(seen), pass);
    }

    void residue_inkdot() {
        std::vector<std::string> seen;
        bool pass = true;
        for (unsigned k = 2; k <= 4; ++k) {
            const auto am = residue_inkdot_machine(k);
            const auto r = check_recognition(am, residue_bit_oracle(k), 14);
            const auto states = state_count(am.machine);
            pass = pass && r.agree && states == 2;
            seen.push_back("k=" + std::to_string(k) + ": " + std::to_string(states) +
                           " states, " + (r.agree ? "agree" : "disagree"));
        }
        add("AC-7", "succinctness", "two states with one inkdot",
            "2 states and agreement on lengths <= 14 for k in {2,3,4}", join(seen), pass);
    }

    void randomized() {
        const auto am = randomized_four_segments();
        const auto oracle = segments_oracle(3);
        bool members_sure = true;
        std::size_t members = 0;
        for (std::size_t n = 1; n <= 16; ++n)
            for (const auto &w : oracle.members_of_length(n)) {
                ++members;
                members_sure = members_sure && acceptance_probability(am, w) == Probability(1);
            }
        const Probability err = max_error(am, oracle, 16);
        add("AC-8", "randomized advice", "two random inkdots with error at most 1/3",
            "members accepted with probability 1; max error exactly 1/3",
            std::to_string(members) + " members " +
                (members_sure ? "all at probability 1" : "not all at probability 1") +
                "; max error " + to_string(err),
            members_sure && members > 0 && err == Probability(1, 3));
    }

    void drift() {
        const auto g = growth_log2();
        const auto am = drift_tm(g);
        const auto &tm = std::get<OneWayTm>(am.machine);
        const auto r = check_recognition(am, drift_oracle(g), 12);

        bool forward = true;
        bool bounded = true;
        bool monotone = true;
        std::uint64_t last_width = 0, last_cells = 0;
        std::vector<std::string> space;
        for (std::size_t n = 8; n <= 64; ++n) {
            const std::string w = bouncing_drift_member(g, n);
            std::size_t head = 1;
            const auto run = run_tm(tm, apply_inkdots(w, drift_advice(g, n)), kDefaultStepBudget,
                                    [&](const TmStep &s) {
                                        forward = forward && s.input_position >= head;
                                        head = s.input_position;
                                    });
            const std::uint64_t width = g(n);
            std::uint64_t log_width = 0;
            while ((std::uint64_t{1} << log_width) < width)
                ++log_width;
            bounded = bounded && run.accepted && drift_member(g, w) &&
                      2 * run.work_cells_used <= 3 * log_width;
            if (width >= last_width)
                monotone = monotone && (width == last_width || run.work_cells_used >= last_cells);
            if (width != last_width)
                space.push_back("g=" + std::to_string(width) + ": " +
                                std::to_string(run.work_cells_used) + " cells");
            last_width = width;
            last_cells = run.work_cells_used;
        }
        add("AC-9", "small-space machines", "one inkdot and logarithmic space in g(n)",
            "agreement on all 797160 strings of length <= 12; input head never moves left; "
            "work cells <= (3/2) ceil(log2 g(n)) on members of length 8..64",
            std::string(r.agree ? "agree" : "disagree") + " on " +
                std::to_string(r.strings_checked) + "; forward-only " + yes_no(forward) + "; " +
                join(space),
            r.agree && r.strings_checked == 797160 && forward && bounded && monotone);
    }

    void decompression() {
        constexpr unsigned k = 3;
        constexpr std::size_t lengths = 8;
        const auto seed = BinarySeed::splitmix(config.seed);
        const auto am = seeded_track_recognizer(seed, k, "Lw");
        const auto &advice = std::get<TrackAdvice>(am.advice);
        std::vector<std::string> tracks;
        for (std::size_t i = 1; i <= lengths; ++i)
            tracks.push_back(advice(i));
        const std::string recovered =
            decompress(std::get<TrackDfa>(am.machine), tracks, k, true);
        const std::string expected = seed.bits(1, seeded_chunk_offset(k, lengths + 1) - 1);
        add("AC-10", "advice tracks", "seed prefix recovered from a track-advised recognizer",
            expected, recovered, recovered == expected);
    }

    void flips() {
        std::vector<std::pair<std::string, Dfa>> machines;
        for (unsigned m = 1; m <= 3; ++m)
            machines.emplace_back("Lm:" + std::to_string(m),
                                  std::get<Dfa>(segments_recognizer(m).machine));
        machines.emplace_back("Lf:sqrt",
                              std::get<Dfa>(spaced_ones_recognizer(growth_sqrt()).machine));
        machines.emplace_back("LANGk-dot", dot_on_one_checker());
        machines.emplace_back("L3rand", std::get<Dfa>(randomized_four_segments().machine));
        for (unsigned k = 2; k <= 3; ++k) {
            const auto prefixed = residue_prefix_machine(k);
            const auto simulated = prefix_to_inkdot(std::get<Dfa>(prefixed.machine), k,
                                                    std::get<PrefixAdvice>(prefixed.advice));
            machines.emplace_back("prefix_to_inkdot(LANGk-prefix:" + std::to_string(k) + ")",
                                  std::get<Dfa>(simulated.machine));
        }
        std::uint64_t checked = 0;
        std::vector<std::string> failed;
        for (const auto &[name, machine] : machines)
            if (!flip_invariant(machine, 10, checked))
                failed.push_back(name);
        add("AC-11", "constant inkdots", "flipping advice and machine preserves the language",
            "invariance to length 10 for every dotted construction",
            failed.empty() ? std::to_string(machines.size()) + " machines, " +
                                 std::to_string(checked) + " dotted words each way"
                           : "fails for " + join(failed),
            failed.empty());
    }

    void reproducibility() {
        std::vector<ExperimentConfig> probes;
        auto probe = [&](std::string command, std::string oracle, std::string builder) {
            ExperimentConfig c;
            c.command = std::move(command);
            c.oracle = std::move(oracle);
            c.builder = std::move(builder);
            c.seed = config.seed;
            c.ceiling = config.ceiling;
            return c;
        };
        probes.push_back(probe("demo", "", "LANGk-prefix:2"));
        probes.push_back(probe("verify", "Lm:3", ""));
        auto search = probe("search", "Lm:1", "");
        search.states = 1;
        search.inkdots = 0;
        search.max_len = 6;
        probes.push_back(search);
        probes.push_back(probe("index", "LANGk:3", ""));
        probes.push_back(probe("decompress", "Lw:k=3", ""));
        bool same = true;
        for (const auto &p : probes)
            same = same && emit_report(run_experiment(p), "json") ==
                               emit_report(run_experiment(p), "json");
        add("AC-12", "reproducibility", "reports are byte-stable",
            "identical JSON across two runs of each command",
            std::string(same ? "identical" : "different") + " bytes for " +
                std::to_string(probes.size()) + " commands",
            same);
    }
};

std::size_t or_default(const std::optional<std::size_t> &v, std::size_t fallback) {
    return v.value_or(fallback);
}

/// Resolves the oracle and builder names of a config against each other.
std::pair<LanguageOracle, AdvisedMachine> resolve(const ExperimentConfig &config) {
    if (config.oracle.empty() && config.builder.empty())
        throw PreconditionError(config.command + " needs an oracle or a builder");
    const std::string builder =
        config.builder.empty() ? default_builder_for(config.oracle) : config.builder;
    auto am = build_by_name(builder, config.seed);
    const std::string oracle = config.oracle.empty() ? am.oracle : config.oracle;
    return {oracle_by_name(oracle, config.seed), std::move(am)};
}

std::string claim_for(const AdvisedMachine &am) {
    const std::string_view n = am.name;
    if (n.starts_with("Lm:"))
        return "AC-1";
    if (n.starts_with("LANGk-prefix:"))
        return "AC-6";
    if (n.starts_with("LANGk-dot:"))
        return "AC-7";
    if (n == "L3rand")
        return "AC-8";
    if (n.starts_with("Lg:"))
        return "AC-9";
    if (n.starts_with("Lw"))
        return "AC-10";
    return "AC-1";
}

} // namespace

bool ReportDocument::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow &r) { return r.pass; });
}

ExperimentConfig config_from_json(const Json &doc) {
    if (!doc.is_object())
        throw ParseError("config: expected an object");
    static const std::vector<std::string> known{"command", "oracle",  "builder", "max_len",
                                                "states",  "inkdots", "ext_len", "seed",
                                                "format",  "jobs",    "ceiling"};
    for (const auto &[key, _] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("config: unknown field '" + key + "'");
    ExperimentConfig c;
    c.command = optional_field<std::string>(doc, "command").value_or("");
    c.oracle = optional_field<std::string>(doc, "oracle").value_or("");
    c.builder = optional_field<std::string>(doc, "builder").value_or("");
    c.max_len = optional_field<std::size_t>(doc, "max_len");
    c.states = optional_field<std::size_t>(doc, "states");
    c.inkdots = optional_field<std::size_t>(doc, "inkdots");
    c.ext_len = optional_field<std::size_t>(doc, "ext_len");
    c.seed = optional_field<std::uint64_t>(doc, "seed").value_or(42);
    c.format = optional_field<std::string>(doc, "format").value_or("json");
    c.jobs = optional_field<unsigned>(doc, "jobs").value_or(1);
    c.ceiling = optional_field<std::uint64_t>(doc, "ceiling").value_or(kDefaultCeiling);
    static const std::vector<std::string> commands{"demo",  "verify",     "search",
                                                   "index", "decompress", "report"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
        throw ParseError("config: unknown command '" + c.command + "'");
    if (c.format != "json" && c.format != "markdown")
        throw ParseError("config: format must be json or markdown");
    return c;
}

Json to_json(const ExperimentConfig &config) {
    return {{"command", config.command},     {"oracle", config.oracle},
            {"builder", config.builder},     {"max_len", optional_json(config.max_len)},
            {"states", optional_json(config.states)},
            {"inkdots", optional_json(config.inkdots)},
            {"ext_len", optional_json(config.ext_len)},
            {"seed", config.seed},           {"format", config.format},
            {"jobs", config.jobs},           {"ceiling", config.ceiling}};
}

ReportDocument run_experiment(const ExperimentConfig &config) {
    const auto started = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.config = config;
    Suite suite{config, {}};

    if (config.command == "demo") {
        auto [oracle, am] = resolve(config);
        const std::size_t n = or_default(config.max_len, kDemoAdviceLength);
        suite.add(claim_for(am), "demo", "construction " + am.name,
                  "machine and advice for " + oracle.name,
                  std::to_string(state_count(am.machine)) + " states, advice for n <= " +
                      std::to_string(n),
                  true);
        doc.artifact = to_json(am, n);
    } else if (config.command == "verify") {
        auto [oracle, am] = resolve(config);
        const std::size_t n = or_default(config.max_len, 12);
        const auto r = check_recognition(am, oracle, n);
        std::string observed = std::string(r.agree ? "agree" : "disagree") + " on " +
                               std::to_string(r.strings_checked) + " strings";
        if (r.counterexample)
            observed += "; counterexample " + r.counterexample->word + " with advice " +
                        r.counterexample->advice;
        suite.add(claim_for(am), "verify", am.name + " against " + oracle.name,
                  "agreement on every string of length 1.." + std::to_string(n), observed,
                  r.agree);
        Json artifact = to_json(r);
        if (std::holds_alternative<RandomizedInkdotAdvice>(am.advice)) {
            const auto err = max_error(am, oracle, n);
            suite.add(claim_for(am), "verify", am.name + " error bound",
                      "max error <= 1/3", "max error " + to_string(err), err <= Probability(1, 3));
            artifact["max_error"] = to_string(err);
        }
        doc.artifact = std::move(artifact);
    } else if (config.command == "search") {
        if (config.oracle.empty())
            throw PreconditionError("search needs an oracle");
        const auto oracle = oracle_by_name(config.oracle, config.seed);
        const auto cert = search_separation(oracle, or_default(config.states, 2),
                                            or_default(config.inkdots, 2),
                                            or_default(config.max_len, 10), config.ceiling,
                                            config.jobs);
        suite.add("AC-2", "search",
                  "q=" + std::to_string(cert.q) + ", b=" + std::to_string(cert.b) +
                      ", N=" + std::to_string(cert.max_len),
                  "exhaustive search over " + std::to_string(cert.machine_space) + " machines",
                  std::string(cert.witness_found ? "witness" : "none_exists") + " after " +
                      std::to_string(cert.machines_searched) + " machines",
                  true);
        doc.artifact = to_json(cert);
    } else if (config.command == "index") {
        if (config.oracle.empty())
            throw PreconditionError("index needs an oracle");
        const auto oracle = oracle_by_name(config.oracle, config.seed);
        std::optional<unsigned> k;
        if (oracle.name.starts_with("LANGk:"))
            k = static_cast<unsigned>(std::stoul(oracle.name.substr(6)));
        const std::size_t l = or_default(config.max_len, k.value_or(2));
        const std::size_t e = or_default(config.ext_len, 2 * l);
        const auto index = myhill_nerode_index(oracle, l, e, config.ceiling);
        const bool bound_applies = k && l >= *k && e >= *k;
        suite.add("AC-5", "index", oracle.name + " words of length " + std::to_string(l),
                  bound_applies ? "index >= " + std::to_string(1u << *k)
                                : std::string("class count"),
                  std::to_string(index), !bound_applies || index >= (1u << *k));
        doc.artifact = Json{{"kind", "index"}, {"oracle", oracle.name}, {"word_len", l},
                            {"ext_len", e}, {"index", index}};
        if (config.states) {
            const auto classes = fact1_class_count(oracle, *config.states, config.ceiling);
            (*doc.artifact)["classes"] = to_json(classes);
        }
    } else if (config.command == "decompress") {
        const std::string name = config.oracle.empty() ? "Lw" : config.oracle;
        const auto params = parse_seeded_name(name, config.seed);
        const auto seed = BinarySeed::splitmix(params.seed);
        const auto am = seeded_track_recognizer(seed, params.k, "Lw");
        const std::size_t n = or_default(config.max_len, 8);
        const auto &advice = std::get<TrackAdvice>(am.advice);
        std::vector<std::string> tracks;
        for (std::size_t i = 1; i <= n; ++i)
            tracks.push_back(advice(i));
        const std::string recovered =
            decompress(std::get<TrackDfa>(am.machine), tracks, params.k, true);
        const std::string expected = n == 0 ? "" : seed.bits(1, seeded_chunk_offset(params.k, n + 1) - 1);
        suite.add("AC-10", "decompress",
                  "k=" + std::to_string(params.k) + ", seed=" + std::to_string(params.seed) +
                      ", i <= " + std::to_string(n),
                  expected, recovered, recovered == expected);
        doc.artifact = Json{{"kind", "decompress"}, {"k", params.k}, {"seed", params.seed},
                            {"lengths", n}, {"bits", recovered}};
    } else if (config.command == "report") {
        suite.segments_upper_bound();
        suite.segments_lower_bound();
        suite.prefix_simulation();
        suite.track_round_trip();
        suite.residue_index();
        suite.residue_prefix();
        suite.residue_inkdot();
        suite.randomized();
        suite.drift();
        suite.decompression();
        suite.flips();
        suite.reproducibility();
    } else {
        throw PreconditionError("unknown command '" + config.command + "'");
    }

    doc.rows = std::move(suite.rows);
    doc.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return doc;
}

std::string emit_report(const ReportDocument &doc, const std::string &format) {
    if (format == "json") {
        Json rows = Json::array();
        for (const auto &r : doc.rows)
            rows.push_back({{"id", r.id},
                            {"group", r.group},
                            {"locus", r.locus},
                            {"expected", r.expected},
                            {"observed", r.observed},
                            {"pass", r.pass}});
        Json out{{"version", doc.version},
                 {"config", to_json(doc.config)},
                 {"rows", std::move(rows)},
                 {"passed", doc.passed()}};
        if (doc.artifact)
            out["artifact"] = *doc.artifact;
        return out.dump(2) + "\n";
    }
    if (format != "markdown")
        throw PreconditionError("format must be json or markdown");

    auto cell = [](std::string s) {
        std::string out;
        for (char c : s)
            out += c == '|' ? std::string("\\|") : c == '\n' ? std::string(" ") : std::string(1, c);
        return out;
    };
    std::ostringstream md;
    md << "# advlab report\n\n";
    md << "- version: " << doc.version << "\n";
    md << "- command: " << doc.config.command << "\n";
    if (!doc.config.oracle.empty())
        md << "- oracle: " << doc.config.oracle << "\n";
    if (!doc.config.builder.empty())
        md << "- builder: " << doc.config.builder << "\n";
    md << "- seed: " << doc.config.seed << "\n";
    md << "- result: " << (doc.passed() ? "pass" : "FAIL") << "\n";
    md << "- wall clock: " << doc.wall_clock_seconds << " s\n";

    std::vector<std::string> groups;
    for (const auto &r : doc.rows)
        if (std::find(groups.begin(), groups.end(), r.group) == groups.end())
            groups.push_back(r.group);
    for (const auto &g : groups) {
        md << "\n## " << g << "\n\n";
        md << "| claim | locus | expected | observed | result |\n";
        md << "|---|---|---|---|---|\n";
        for (const auto &r : doc.rows)
            if (r.group == g)
                md << "| " << cell(r.id) << " | " << cell(r.locus) << " | " << cell(r.expected)
                   << " | " << cell(r.observed) << " | " << (r.pass ? "pass" : "FAIL") << " |\n";
    }
    return md.str();
}

} // namespace advlab
