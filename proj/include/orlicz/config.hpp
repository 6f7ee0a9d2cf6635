#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orlicz/verify.hpp"

namespace orlicz {

// One self-contained experiment: a command plus the space, function and
// claim descriptors it needs. Parsed from a single JSON document.
struct ExperimentConfig {
    std::string command;
    std::string mode;  // "lebesgue" | "orlicz" for the inclusion commands

    std::optional<YoungFunction> phi, phi1, phi2, phi3, phiH;
    std::optional<double> p, p1, p2;
    std::optional<Weight> weight, u1, u2, u3, uQ;
    std::optional<GridSpec> grid;
    std::optional<Ball> ball;
    std::optional<FuncExpr> function, f1, f2;
    std::vector<FuncExpr> tests;
    std::optional<int> seeded_tests;  // size of a seeded batch instead of explicit tests
    std::optional<int> samples;
    std::vector<std::array<std::int64_t, 3>> shifts;
};

struct ParseOutcome {
    std::optional<ExperimentConfig> config;
    std::vector<std::string> errors;  // "path.to.key: message"
    bool ok() const { return config.has_value() && errors.empty(); }
};

// Validates field by field; every failure carries the JSON path of the
// offending key.
ParseOutcome parse_config(const std::string& text);

nlohmann::ordered_json serialize_config(const ExperimentConfig& cfg);

// Descriptor (de)serialization shared with tests and the CLI.
nlohmann::ordered_json young_to_json(const YoungFunction& phi);
nlohmann::ordered_json weight_to_json(const Weight& u);
nlohmann::ordered_json grid_to_json(const GridSpec& spec);
nlohmann::ordered_json ball_to_json(const Ball& ball);
nlohmann::ordered_json expr_to_json(const FuncExpr& e);
nlohmann::ordered_json report_to_json(const VerificationReport& rep);

struct RunOutcome {
    nlohmann::ordered_json report;                // without the timestamp field
    std::string report_stem;                      // output file name without extension
    std::optional<DistributionProfile> profile;   // for --profile-csv
    int exit_code = 0;                            // 0 passed, 1 verification failed
};

// Dispatches the config to the owning module. Deterministic for a fixed
// (config, seed); the seed feeds every seeded batch and is echoed in the
// report.
RunOutcome run_command(const ExperimentConfig& cfg, std::uint64_t seed);

// Writes <stem>.json (with a timestamp added) and optionally
// <stem>_profile.csv into out_dir, atomically (temp file + rename).
// Returns the outcome's exit code, or 2 on I/O failure.
int emit_report(const RunOutcome& outcome, const std::filesystem::path& out_dir, bool write_csv);

}  // namespace orlicz
