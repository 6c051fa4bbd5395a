#pragma once

/// @file oracle.hpp
/// @brief Exact TSP answers for small instances, used as ground truth.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seedga/encoding.hpp"
#include "seedga/problems.hpp"

namespace seedga {

/// Largest instance brute_force_tsp accepts; 10! tours at the limit.
inline constexpr std::size_t kMaxOraclePlaces = 11;

/// Largest instance held_karp_tsp accepts.
inline constexpr std::size_t kMaxHeldKarpPlaces = 16;

struct OracleResult {
    PermutationChromosome optimal_chromosome;
    std::vector<PlaceId> optimal_tour;
    double optimal_length = 0;
    std::size_t enumerated_count = 0;
};

/// Enumerates every home-anchored tour in lexicographic chromosome order and
/// keeps the first strict minimum, so ties resolve to the lexicographically
/// smallest chromosome. Throws InstanceTooLargeError above kMaxOraclePlaces.
OracleResult brute_force_tsp(const TspInstance& instance);

/// Bitmask dynamic program over subsets of non-home places. Independent of
/// brute_force_tsp; path lengths accumulate home-outward in tour order, the
/// same summation order as tsp_fitness. Throws InstanceTooLargeError above
/// kMaxHeldKarpPlaces.
double held_karp_tsp(const TspInstance& instance);

/// A route someone asserts something about.
struct RouteClaim {
    std::string label;
    PermutationChromosome chromosome;
    std::optional<double> stated_length;
    bool claimed_optimal = false;
};

struct ClaimFinding {
    std::string label;
    std::string tour;
    double computed_length = 0;
    std::optional<double> stated_length;
    bool claimed_optimal = false;
    /// computed_length - oracle optimum.
    double gap_to_optimum = 0;
    /// Stated length (if any) equals the computed length, and an optimality
    /// claim (if any) matches the oracle.
    bool consistent = true;
    std::string note;
};

struct ClaimReport {
    OracleResult oracle;
    double held_karp_length = 0;
    std::vector<ClaimFinding> findings;

    bool oracles_agree() const noexcept { return held_karp_length == oracle.optimal_length; }
    bool all_consistent() const noexcept;
};

/// Evaluates each claimed route against the instance and both oracles.
ClaimReport adjudicate_claims(const TspInstance& instance, std::span<const RouteClaim> claims);

} // namespace seedga
