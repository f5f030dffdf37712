#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advlab/serialize.hpp"

namespace advlab {

inline constexpr const char *kToolVersion = "1.0.0";

struct ExperimentConfig {
    /// demo, verify, search, index, decompress or report.
    std::string command;
    std::string oracle;
    std::string builder;
    /// Unset bounds take the command's default.
    std::optional<std::size_t> max_len;
    std::optional<std::size_t> states;
    std::optional<std::size_t> inkdots;
    std::optional<std::size_t> ext_len;
    std::uint64_t seed = 42;
    std::string format = "json";
    unsigned jobs = 1;
    std::uint64_t ceiling = kDefaultCeiling;
};

/// Throws ParseError for malformed configs and unknown fields.
ExperimentConfig config_from_json(const Json &doc);
Json to_json(const ExperimentConfig &config);

struct ReportRow {
    std::string id;
    std::string group;
    std::string locus;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct ReportDocument {
    std::string version = kToolVersion;
    ExperimentConfig config;
    std::vector<ReportRow> rows;
    /// Serialized machine, certificate or class report, when the command has one.
    std::optional<Json> artifact;
    double wall_clock_seconds = 0.0;

    bool passed() const;
};

/// Dispatches the configured command. Throws UnknownNameError for unknown
/// oracles or builders, SearchRefused when a ceiling is hit, PreconditionError
/// for out-of-range bounds.
ReportDocument run_experiment(const ExperimentConfig &config);

/// JSON keys are sorted and the wall clock is left out, so identical
/// configurations render identical bytes. Markdown shows one table per group.
std::string emit_report(const ReportDocument &doc, const std::string &format);

} // namespace advlab
