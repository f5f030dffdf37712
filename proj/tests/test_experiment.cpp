#include "doctest.h"

#include "advlab/error.hpp"
#include "advlab/experiment.hpp"

using namespace advlab;

namespace {

ExperimentConfig config(const std::string &command, const std::string &oracle = "",
                        const std::string &builder = "") {
    ExperimentConfig c;
    c.command = command;
    c.oracle = oracle;
    c.builder = builder;
    return c;
}

} // namespace

TEST_CASE("config json") {
    const auto c = config_from_json(Json{{"command", "search"}, {"oracle", "L3"}, {"states", 2}});
    CHECK(c.command == "search");
    CHECK(c.states == std::optional<std::size_t>(2));
    CHECK_FALSE(c.max_len);
    CHECK(c.seed == 42);
    CHECK(c.ceiling == kDefaultCeiling);
    CHECK(config_from_json(to_json(c)).states == c.states);
    CHECK(to_json(c)["max_len"].is_null());
    CHECK_THROWS_AS(config_from_json(Json{{"command", "fly"}}), ParseError);
    CHECK_THROWS_AS(config_from_json(Json{{"command", "demo"}, {"colour", 1}}), ParseError);
    CHECK_THROWS_AS(config_from_json(Json{{"command", "demo"}, {"format", "xml"}}), ParseError);
    CHECK_THROWS_AS(config_from_json(Json{{"command", "demo"}, {"max_len", "ten"}}), ParseError);
}

TEST_CASE("demo and verify") {
    const auto demo = run_experiment(config("demo", "", "LANGk-dot:2"));
    CHECK(demo.passed());
    REQUIRE(demo.artifact);
    CHECK((*demo.artifact)["states"] == 2);

    auto v = config("verify", "LANGk:2");
    v.max_len = 8;
    const auto ok = run_experiment(v);
    CHECK(ok.passed());
    CHECK((*ok.artifact)["strings_checked"] == 510);

    auto mismatch = config("verify", "LANGk:3", "LANGk-dot:2");
    mismatch.max_len = 6;
    CHECK_FALSE(run_experiment(mismatch).passed());

    auto randomized = config("verify", "L3", "L3rand");
    randomized.max_len = 12;
    const auto r = run_experiment(randomized);
    CHECK(r.passed());
    CHECK((*r.artifact)["max_error"] == "1/3");

    CHECK_THROWS_AS(run_experiment(config("verify", "Lq")), UnknownNameError);
    CHECK_THROWS_AS(run_experiment(config("demo", "", "nope")), UnknownNameError);
}

TEST_CASE("search, index and decompress") {
    auto s = config("search", "Lm:1");
    s.states = 1;
    s.inkdots = 0;
    s.max_len = 6;
    const auto doc = run_experiment(s);
    CHECK(doc.passed());
    CHECK((*doc.artifact)["outcome"] == "none_exists");

    auto refused = config("search", "L3");
    refused.states = 3;
    refused.ceiling = 10;
    CHECK_THROWS_AS(run_experiment(refused), SearchRefused);

    const auto idx = run_experiment(config("index", "LANGk:3"));
    CHECK(idx.passed());
    CHECK((*idx.artifact)["index"] == 8);

    auto with_classes = config("index", "Lm:1");
    with_classes.states = 4;
    CHECK(run_experiment(with_classes).artifact->contains("classes"));

    const auto dec = run_experiment(config("decompress", "Lw:k=3"));
    CHECK(dec.passed());
    CHECK((*dec.artifact)["bits"] == BinarySeed::splitmix(42).bits(1, 53));
}

TEST_CASE("reports render deterministically") {
    auto v = config("verify", "Lm:2");
    v.max_len = 8;
    const auto a = run_experiment(v);
    const auto b = run_experiment(v);
    const std::string ja = emit_report(a, "json");
    CHECK(ja == emit_report(b, "json"));
    CHECK(ja.back() == '\n');
    const Json parsed = Json::parse(ja);
    CHECK(parsed["passed"] == true);
    CHECK_FALSE(parsed.contains("wall_clock_seconds"));
    REQUIRE(parsed["rows"].size() == 1);
    for (const char *key : {"id", "group", "locus", "expected", "observed", "pass"})
        CHECK(parsed["rows"][0].contains(key));
    const std::string md = emit_report(a, "markdown");
    CHECK(md.find("| ") != std::string::npos);
    CHECK(md.find("verify") != std::string::npos);
}
