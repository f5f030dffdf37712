// Runs the full CLI report twice and prints one line per acceptance criterion.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "advlab/advlab.h"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run report() {
    const std::string command = std::string(ADVLAB_CLI) + " report --format json";
    Run r;
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe)
        return r;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        r.out.append(buffer, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct Verdict {
    bool pass = true;
    std::vector<std::string> observed;
};

} // namespace

int main() {
    std::cout << "advlab " << advlab_version() << " acceptance\n";
    const Run first = report();
    const Run second = report();

    std::map<int, Verdict> verdicts;
    for (int id = 1; id <= 12; ++id)
        verdicts[id].pass = false;
    try {
        const auto doc = nlohmann::json::parse(first.out);
        std::map<int, bool> seen;
        for (const auto &row : doc.at("rows")) {
            const std::string id = row.at("id").get<std::string>();
            if (id.rfind("AC-", 0) != 0)
                continue;
            const int n = std::stoi(id.substr(3));
            auto &v = verdicts[n];
            if (!seen[n]) {
                v.pass = true;
                seen[n] = true;
            }
            v.pass = v.pass && row.at("pass").get<bool>();
            v.observed.push_back(row.at("observed").get<std::string>());
        }
    } catch (const std::exception &e) {
        std::cout << "report did not parse: " << e.what() << "\n";
    }

    // Reproducibility is judged on the two full runs, not only the in-process row.
    const bool identical = !first.out.empty() && first.out == second.out;
    verdicts[12].pass = verdicts[12].pass && identical;
    verdicts[12].observed.push_back(identical ? "two CLI runs byte-identical (" +
                                                    std::to_string(first.out.size()) + " bytes)"
                                              : "two CLI runs differ");

    int failed = 0;
    for (const auto &[id, v] : verdicts) {
        std::string joined;
        for (const auto &o : v.observed)
            joined += (joined.empty() ? "" : "; ") + o;
        std::cout << "AC-" << id << " " << (v.pass ? "PASS" : "FAIL") << "  " << joined << "\n";
        failed += v.pass ? 0 : 1;
    }
    const bool exit_ok = first.code == (failed ? 1 : 0);
    if (!exit_ok)
        std::cout << "unexpected CLI exit status " << first.code << "\n";
    std::cout << (12 - failed) << "/12 criteria pass\n";
    return failed == 0 && exit_ok ? 0 : 1;
}
