#pragma once

/// @file config.hpp
/// @brief JSON run configuration documents.
///
/// Schema (all keys required unless marked optional; unknown keys rejected):
///
///     {
///       "problem": "tsp" | "string",
///       "instance": "<edge-list CSV path>" | "<target string>",
///       "alphabet": "<characters>",                      (optional, string only)
///       "population_size": 50,
///       "crossover": {"operator": "ox1" | "pmx" | "single-point", "rate": 0.9},
///       "mutation": {"operator": "swap" | "random-reset", "rate": 0.2},
///       "elitism_count": 1,
///       "seed": 1,
///       "termination": {
///         "max_generations": 200,
///         "fitness_threshold": 0,                        (optional)
///         "stagnation_window": 50,                       (optional)
///         "wall_clock_ms": 1000                          (optional)
///       }
///     }

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "seedga/engine.hpp"

namespace seedga {

enum class ProblemKind { tsp, string };

struct RunConfigDocument {
    ProblemKind problem = ProblemKind::tsp;
    std::string instance;
    std::optional<std::string> alphabet;
    GAConfig ga;
};

/// Command-line flags that replace document values.
struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> generations;
    std::optional<std::size_t> population;
    std::optional<double> crossover_rate;
    std::optional<double> mutation_rate;
    std::optional<std::size_t> elitism;
};

/// Schema violations of a parsed JSON value, one message per problem, each
/// naming the offending field. Empty when the shape is valid.
std::vector<std::string> schema_violations(const nlohmann::json& document);

/// Parses and schema-checks. Throws ConfigError listing every violation.
RunConfigDocument parse_run_config(std::string_view json_text);

void apply_overrides(RunConfigDocument& document, const ConfigOverrides& overrides);

nlohmann::json to_json(const RunConfigDocument& document);

} // namespace seedga
