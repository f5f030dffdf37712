#include "advlab/advlab.h"

#include <cstring>
#include <string>

#include "advlab/error.hpp"
#include "advlab/experiment.hpp"

struct advlab_oracle {
    advlab::LanguageOracle oracle;
};

struct advlab_machine {
    advlab::AdvisedMachine machine;
};

struct advlab_report {
    advlab::ReportDocument doc;
};

namespace {

thread_local std::string last_error;

advlab_status fail(advlab_status status, const std::string &what) {
    last_error = what;
    return status;
}

template <class F> advlab_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return ADVLAB_OK;
    } catch (const advlab::SearchRefused &e) {
        return fail(ADVLAB_E_REFUSED, e.what());
    } catch (const advlab::InputDomainError &e) {
        return fail(ADVLAB_E_DOMAIN, e.what());
    } catch (const advlab::AdviceMismatchError &e) {
        return fail(ADVLAB_E_ADVICE, e.what());
    } catch (const advlab::MachineFault &e) {
        return fail(ADVLAB_E_MACHINE, e.what());
    } catch (const advlab::SpaceCapExceeded &e) {
        return fail(ADVLAB_E_MACHINE, e.what());
    } catch (const advlab::DecodeFailure &e) {
        return fail(ADVLAB_E_DECODE, e.what());
    } catch (const advlab::ParseError &e) {
        return fail(ADVLAB_E_PARSE, e.what());
    } catch (const advlab::UnknownNameError &e) {
        return fail(ADVLAB_E_INVALID_ARGUMENT, e.what());
    } catch (const advlab::PreconditionError &e) {
        return fail(ADVLAB_E_INVALID_ARGUMENT, e.what());
    } catch (const advlab::OverflowError &e) {
        return fail(ADVLAB_E_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception &e) {
        return fail(ADVLAB_E_PARSE, e.what());
    } catch (const std::exception &e) {
        return fail(ADVLAB_E_INTERNAL, e.what());
    } catch (...) {
        return fail(ADVLAB_E_INTERNAL, "unknown error");
    }
}

char *copy_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define REQUIRE_ARG(p)                                                                        \
    do {                                                                                      \
        if (!(p))                                                                             \
            return fail(ADVLAB_E_INVALID_ARGUMENT, #p " must not be null");                   \
    } while (0)

} // namespace

extern "C" {

const char *advlab_version(void) { return advlab::kToolVersion; }

const char *advlab_last_error(void) { return last_error.c_str(); }

void advlab_string_free(char *s) { delete[] s; }

advlab_status advlab_oracle_open(const char *name, uint64_t default_seed, advlab_oracle **out) {
    REQUIRE_ARG(name);
    REQUIRE_ARG(out);
    *out = nullptr;
    return guarded([&] { *out = new advlab_oracle{advlab::oracle_by_name(name, default_seed)}; });
}

void advlab_oracle_close(advlab_oracle *oracle) { delete oracle; }

advlab_status advlab_oracle_member(const advlab_oracle *oracle, const char *word,
                                   int *is_member) {
    REQUIRE_ARG(oracle);
    REQUIRE_ARG(word);
    REQUIRE_ARG(is_member);
    return guarded([&] { *is_member = oracle->oracle.member(word) ? 1 : 0; });
}

advlab_status advlab_oracle_alphabet(const advlab_oracle *oracle, char **out) {
    REQUIRE_ARG(oracle);
    REQUIRE_ARG(out);
    return guarded([&] { *out = copy_string(oracle->oracle.alphabet); });
}

advlab_status advlab_machine_build(const char *builder, uint64_t default_seed,
                                   advlab_machine **out) {
    REQUIRE_ARG(builder);
    REQUIRE_ARG(out);
    *out = nullptr;
    return guarded(
        [&] { *out = new advlab_machine{advlab::build_by_name(builder, default_seed)}; });
}

void advlab_machine_close(advlab_machine *machine) { delete machine; }

advlab_status advlab_machine_state_count(const advlab_machine *machine, uint64_t *out) {
    REQUIRE_ARG(machine);
    REQUIRE_ARG(out);
    return guarded([&] { *out = advlab::state_count(machine->machine.machine); });
}

advlab_status advlab_machine_accept_probability(const advlab_machine *machine, const char *word,
                                                int64_t *num, int64_t *den) {
    REQUIRE_ARG(machine);
    REQUIRE_ARG(word);
    REQUIRE_ARG(num);
    REQUIRE_ARG(den);
    return guarded([&] {
        const auto p = advlab::acceptance_probability(machine->machine, word);
        *num = p.numerator();
        *den = p.denominator();
    });
}

advlab_status advlab_machine_to_json(const advlab_machine *machine, uint32_t max_n, char **out) {
    REQUIRE_ARG(machine);
    REQUIRE_ARG(out);
    return guarded([&] { *out = copy_string(advlab::to_json(machine->machine, max_n).dump(2)); });
}

advlab_status advlab_check_recognition(const advlab_machine *machine,
                                       const advlab_oracle *oracle, uint32_t max_len, int *agree,
                                       char **report_json) {
    REQUIRE_ARG(machine);
    REQUIRE_ARG(oracle);
    return guarded([&] {
        const auto r = advlab::check_recognition(machine->machine, oracle->oracle, max_len);
        if (agree)
            *agree = r.agree ? 1 : 0;
        if (report_json)
            *report_json = copy_string(advlab::to_json(r).dump(2));
    });
}

advlab_status advlab_search_separation(const advlab_oracle *oracle, uint32_t states,
                                       uint32_t inkdots, uint32_t max_len, uint64_t ceiling,
                                       uint32_t jobs, char **certificate_json) {
    REQUIRE_ARG(oracle);
    REQUIRE_ARG(certificate_json);
    return guarded([&] {
        const auto cert = advlab::search_separation(oracle->oracle, states, inkdots, max_len,
                                                    ceiling, jobs);
        *certificate_json = copy_string(advlab::to_json(cert).dump(2));
    });
}

advlab_status advlab_myhill_nerode_index(const advlab_oracle *oracle, uint32_t word_len,
                                         uint32_t ext_len, uint64_t ceiling, uint64_t *out) {
    REQUIRE_ARG(oracle);
    REQUIRE_ARG(out);
    return guarded(
        [&] { *out = advlab::myhill_nerode_index(oracle->oracle, word_len, ext_len, ceiling); });
}

advlab_status advlab_run_experiment(const char *config_json, advlab_report **out) {
    REQUIRE_ARG(config_json);
    REQUIRE_ARG(out);
    *out = nullptr;
    return guarded([&] {
        const auto config = advlab::config_from_json(advlab::Json::parse(config_json));
        *out = new advlab_report{advlab::run_experiment(config)};
    });
}

void advlab_report_close(advlab_report *report) { delete report; }

int advlab_report_passed(const advlab_report *report) {
    return report && report->doc.passed() ? 1 : 0;
}

double advlab_report_wall_clock(const advlab_report *report) {
    return report ? report->doc.wall_clock_seconds : 0.0;
}

advlab_status advlab_report_render(const advlab_report *report, const char *format, char **out) {
    REQUIRE_ARG(report);
    REQUIRE_ARG(format);
    REQUIRE_ARG(out);
    return guarded([&] { *out = copy_string(advlab::emit_report(report->doc, format)); });
}

} // extern "C"
