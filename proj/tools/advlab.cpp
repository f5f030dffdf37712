// Command-line front end. Talks to the library through the C interface only.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "advlab/advlab.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kRefused = 3 };

struct Options {
    std::string oracle;
    std::string builder;
    std::optional<std::size_t> max_len;
    std::optional<std::size_t> states;
    std::optional<std::size_t> inkdots;
    std::optional<std::size_t> ext_len;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
    unsigned jobs = 1;
    std::optional<std::uint64_t> ceiling;
};

void add_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--oracle", o.oracle, "language, e.g. Lm:3, LANGk:3, Lg:log2, Lw:k=3");
    cmd->add_option("--builder", o.builder, "construction, e.g. Lm:3, LANGk-prefix:2, LANGk-dot:2, L3rand");
    cmd->add_option("--max-len", o.max_len, "length bound (word length for index)");
    cmd->add_option("--states", o.states, "state budget (class-count bound for index)");
    cmd->add_option("--inkdots", o.inkdots, "inkdot budget");
    cmd->add_option("--ext-len", o.ext_len, "suffix length for index");
    cmd->add_option("--seed", o.seed, "seed for sampling and seeded languages")
        ->capture_default_str();
    cmd->add_option("--format", o.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
    cmd->add_option("--jobs", o.jobs, "worker threads for searches")->check(CLI::PositiveNumber);
    cmd->add_option("--ceiling", o.ceiling, "search ceiling (overrides ADVICE_LAB_CEILING)");
}

std::optional<std::uint64_t> env_ceiling() {
    const char *text = std::getenv("ADVICE_LAB_CEILING");
    if (!text || !*text)
        return std::nullopt;
    char *end = nullptr;
    const auto value = std::strtoull(text, &end, 10);
    if (*end != '\0')
        throw CLI::ValidationError("ADVICE_LAB_CEILING", "not a number: " + std::string(text));
    return value;
}

nlohmann::json config_json(const std::string &command, const Options &o) {
    nlohmann::json c{{"command", command}, {"seed", o.seed}, {"format", o.format},
                     {"jobs", o.jobs}};
    if (!o.oracle.empty())
        c["oracle"] = o.oracle;
    if (!o.builder.empty())
        c["builder"] = o.builder;
    auto put = [&](const char *key, const std::optional<std::size_t> &v) {
        if (v)
            c[key] = *v;
    };
    put("max_len", o.max_len);
    put("states", o.states);
    put("inkdots", o.inkdots);
    put("ext_len", o.ext_len);
    if (auto ceiling = o.ceiling ? o.ceiling : env_ceiling())
        c["ceiling"] = *ceiling;
    return c;
}

int exit_for(advlab_status status) {
    switch (status) {
    case ADVLAB_E_REFUSED: return kRefused;
    case ADVLAB_E_INVALID_ARGUMENT:
    case ADVLAB_E_PARSE: return kUsage;
    default: return kFail;
    }
}

int run(const std::string &command, const Options &o) {
    const std::string config = config_json(command, o).dump();
    advlab_report *report = nullptr;
    if (const auto status = advlab_run_experiment(config.c_str(), &report); status != ADVLAB_OK) {
        std::cerr << "advlab " << command << ": " << advlab_last_error() << "\n";
        return exit_for(status);
    }
    char *text = nullptr;
    const auto status = advlab_report_render(report, o.format.c_str(), &text);
    const bool passed = advlab_report_passed(report) != 0;
    std::cerr << "advlab " << command << ": " << (passed ? "pass" : "FAIL") << " in "
              << advlab_report_wall_clock(report) << " s\n";
    advlab_report_close(report);
    if (status != ADVLAB_OK) {
        std::cerr << "advlab " << command << ": " << advlab_last_error() << "\n";
        return exit_for(status);
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << text;
        if (!file) {
            advlab_string_free(text);
            std::cerr << "advlab: cannot write " << o.out << "\n";
            return kFail;
        }
    }
    advlab_string_free(text);
    return passed ? kPass : kFail;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Finite automata with advice: constructions and exhaustive checks"};
    app.set_version_flag("--version", std::string(advlab_version()));
    app.require_subcommand(1);

    const std::pair<const char *, const char *> commands[] = {
        {"demo", "build a construction and print machine and advice"},
        {"verify", "compare an advised machine with its language on all short words"},
        {"search", "look for a small dfa with few inkdots recognizing a language"},
        {"index", "count suffix-equivalence classes of fixed-length words"},
        {"decompress", "recover the seed prefix behind the seeded language"},
        {"report", "run every acceptance check"},
    };
    Options options;
    std::string chosen;
    for (const auto &[name, help] : commands) {
        auto *cmd = app.add_subcommand(name, help);
        add_flags(cmd, options);
        cmd->callback([&chosen, name = std::string(name)] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
        return run(chosen, options);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
}
