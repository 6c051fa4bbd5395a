#pragma once

/// @file cli.hpp
/// @brief Subcommand implementations behind the seedga executable.
///
/// Each command writes results to `out`, diagnostics to `err`, and returns
/// the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "seedga/config.hpp"

namespace seedga::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitUnreached = 1,
    kExitInputError = 2,
    kExitTooLarge = 3,
};

struct RunOptions {
    std::string config_path;
    ConfigOverrides overrides;
    std::string out_dir = ".";
    /// Seeds seed, seed+1, ..., run concurrently.
    std::size_t runs = 1;
};

/// Writes <out_dir>/run_<seed>.csv and <out_dir>/run_<seed>.json per run.
/// Exit 1 only when a fitness threshold is configured and some run misses it.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Exit 0 iff every reproducible cell matches.
int cmd_reproduce(bool as_json, std::ostream& out, std::ostream& err);

/// Prints {optimal_tour, optimal_length, enumerated_count} as JSON.
int cmd_oracle(const std::string& matrix_path, std::ostream& out, std::ostream& err);

struct StringDemoOptions {
    std::string target;
    std::optional<std::string> alphabet;
    std::uint64_t seed = 1;
    std::size_t population = 200;
    std::size_t generations = 2000;
    double crossover_rate = 0.9;
    double mutation_rate = 0.8;
    std::size_t elitism = 2;
};

GAConfig string_demo_config(const StringDemoOptions& options);

/// One line per generation: `<generation> <best_fitness> <candidate>`.
/// Exit 0 when the target is matched, 1 otherwise.
int cmd_string_demo(const StringDemoOptions& options, std::ostream& out, std::ostream& err);

} // namespace seedga::cli
