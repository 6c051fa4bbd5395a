#pragma once

/// @file reproduce.hpp
/// @brief Recomputes the worked example and diffs it against the printed cells.
///
/// Pass/fail per cell is |expected - computed| <= tolerance and nothing else.
/// Integer distance sums compare exactly; six-decimal cells use 5e-7.
/// Cells that are internally inconsistent in the source are listed under
/// not_checked with the reason, never dropped silently.

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seedga/oracle.hpp"

namespace seedga {

inline constexpr double kPrintedTolerance = 5e-7;
inline constexpr double kClosureTolerance = 1e-9;

struct CellCheck {
    std::string table;
    std::string cell;
    double expected = 0;
    double computed = 0;
    double tolerance = 0;
    bool pass = false;
};

struct ReproductionReport {
    std::vector<CellCheck> cells;
    std::vector<std::string> not_checked;
    std::vector<std::string> notes;
    ClaimReport claims;

    bool passed() const noexcept;
};

/// Probability and closed cumulative columns for given selection values and
/// total, at whatever precision the inputs carry.
struct ProbabilityColumns {
    std::vector<double> probabilities;
    std::vector<double> cumulative;
};

ProbabilityColumns probability_columns(std::span<const double> values, double total);

/// Edge list parsed from the CSV fixture versus the transcribed edges.
std::vector<CellCheck> check_distances();
/// Tour length of each initial chromosome.
std::vector<CellCheck> check_initial_fitness();
/// Selection values, total, probability and cumulative columns, wheel closure.
std::vector<CellCheck> check_selection();
/// Tour length of each printed post-mutation route.
std::vector<CellCheck> check_mutated_fitness();

ReproductionReport reproduce_worked_example();

std::string render_text(const ReproductionReport& report);
nlohmann::json to_json(const ReproductionReport& report);

} // namespace seedga
