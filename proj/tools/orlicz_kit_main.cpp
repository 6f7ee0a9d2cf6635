// orlicz-kit: batch front-end for weighted weak Lebesgue / weak Orlicz
// quasi-norm computations and claim verification.
//
//   orlicz-kit <command> --config <file> [--out <dir>] [--profile-csv] [--seed N]
//
// Exit codes: 0 all checks passed, 1 a verification failed or a searched
// constant was not certified, 2 configuration/usage/I-O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orlicz/config.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted weak Lebesgue / weak Orlicz quasi-norm toolkit"};
    app.name("orlicz-kit");

    std::string command, config_path, out_dir = ".";
    bool profile_csv = false;
    std::uint64_t seed = 0;

    app.add_option("command", command,
                   "norm | oracle | validate-young | validate-weight | check-precede | "
                   "check-dominate | verify-inclusion | verify-holder | "
                   "verify-ball-inclusion | verify-translation | probe-no-inclusion")
        ->required();
    app.add_option("--config", config_path, "experiment config (JSON)")->required();
    app.add_option("--out", out_dir, "output directory for reports");
    app.add_flag("--profile-csv", profile_csv, "also write the (value, measure) profile CSV");
    app.add_option("--seed", seed, "seed for all randomized batches (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const orlicz::ParseOutcome parsed = orlicz::parse_config(slurp(config_path));
        if (!parsed.ok()) {
            std::cerr << "config errors in " << config_path << ":\n";
            for (const auto& e : parsed.errors) std::cerr << "  " << e << "\n";
            return 2;
        }
        if (parsed.config->command != command) {
            std::cerr << "config command '" << parsed.config->command
                      << "' does not match CLI command '" << command << "'\n";
            return 2;
        }

        const orlicz::RunOutcome outcome = orlicz::run_command(*parsed.config, seed);
        const int code = orlicz::emit_report(outcome, out_dir, profile_csv);

        std::cout << command << ": "
                  << (outcome.exit_code == 0 ? "ok" : "FAILED") << " -> "
                  << (std::filesystem::path(out_dir) / (outcome.report_stem + ".json")).string()
                  << "\n";
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
