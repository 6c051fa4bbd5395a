#pragma once

/// @file worked_example.hpp
/// @brief The six-place worked example as published, cell for cell.
///
/// Values here are transcriptions of printed tables, not computations. They
/// are the expected side of every reproduction check.

#include <cstddef>
#include <string>
#include <vector>

#include "seedga/encoding.hpp"
#include "seedga/oracle.hpp"
#include "seedga/problems.hpp"

namespace seedga::worked_example {

inline constexpr std::size_t kPlaces = 6;

/// The 15 travel-history edges. The row printed with serial "45" is the
/// P1-P5 edge, distance 6.
std::vector<DistanceEdge> travel_edges();

/// The travel history as CSV, serial-number column included.
std::string travel_edges_csv();

TspInstance travel_instance();

/// The eight initial chromosomes.
std::vector<PermutationChromosome> initial_chromosomes();

/// Printed tour length of each initial chromosome.
std::vector<double> initial_fitness();

/// Printed selection values (1/f), six decimals.
std::vector<double> selection_values();
inline constexpr double kSelectionTotal = 0.269631;

/// Printed probability and cumulative columns, nine decimals.
std::vector<double> selection_probabilities();
std::vector<double> cumulative_probabilities();

/// Printed uniform draws used for selection and for crossover.
std::vector<double> selection_draws();
std::vector<double> crossover_draws();

/// Printed old -> new chromosome mapping (1-based) after selection.
std::vector<std::size_t> selection_mapping();

/// Printed chromosomes after selection/crossover and after mutation.
std::vector<PermutationChromosome> selected_chromosomes();
std::vector<PermutationChromosome> mutated_chromosomes();

/// Routes printed with the post-mutation fitness values, and those values.
std::vector<PermutationChromosome> mutated_routes();
std::vector<double> mutated_fitness();

/// The route named as optimal in the closing discussion (P1..P6 in order).
PermutationChromosome claimed_optimal_route();

/// Claims about specific routes: the closing optimum, the best initial
/// route, and the best post-mutation route.
std::vector<RouteClaim> route_claims();

} // namespace seedga::worked_example
