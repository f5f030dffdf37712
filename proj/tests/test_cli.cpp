#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string &args, const std::string &env = "") {
    const std::string command = env + " " + std::string(ADVLAB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        r.out.append(buffer, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("passing commands exit 0 with json on stdout") {
    const auto demo = cli("demo --builder LANGk-dot:2 --max-len 6");
    CHECK(demo.code == 0);
    const auto doc = nlohmann::json::parse(demo.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["artifact"]["states"] == 2);

    const auto verify = cli("verify --oracle Lm:1 --max-len 8 --format markdown");
    CHECK(verify.code == 0);
    CHECK(verify.out.find('|') != std::string::npos);

    const auto index = cli("index --oracle LANGk:2");
    CHECK(index.code == 0);
    CHECK(nlohmann::json::parse(index.out)["artifact"]["index"] == 4);
}

TEST_CASE("a failing check exits 1") {
    const auto r = cli("verify --oracle LANGk:3 --builder LANGk-dot:2 --max-len 6");
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["passed"] == false);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli("").code == 2);
    CHECK(cli("fly").code == 2);
    CHECK(cli("verify --oracle Lq:3").code == 2);
    CHECK(cli("verify --format xml --oracle Lm:1").code == 2);
    CHECK(cli("search --oracle L3 --states many").code == 2);
    CHECK(cli("search --oracle L3", "ADVICE_LAB_CEILING=lots").code == 2);
}

TEST_CASE("ceiling refusals exit 3") {
    CHECK(cli("search --oracle L3 --states 3 --ceiling 1000").code == 3);
    CHECK(cli("search --oracle L3 --states 3", "ADVICE_LAB_CEILING=1000").code == 3);
    // The flag wins over the environment.
    CHECK(cli("search --oracle Lm:1 --states 1 --inkdots 0 --max-len 4 --ceiling 100000",
              "ADVICE_LAB_CEILING=1")
              .code == 0);
    CHECK(cli("index --oracle LANGk:3 --max-len 20 --ext-len 20 --ceiling 10").code == 3);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "advlab_cli_test.json";
    std::filesystem::remove(path);
    const auto r = cli("decompress --oracle Lw:k=3 --out " + path.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::stringstream text;
    text << file.rdbuf();
    const auto doc = nlohmann::json::parse(text.str());
    CHECK(doc["artifact"]["bits"].get<std::string>().size() == 53);
    std::filesystem::remove(path);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string args = "search --oracle Lm:1 --states 2 --inkdots 1 --max-len 5 --jobs 2";
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
