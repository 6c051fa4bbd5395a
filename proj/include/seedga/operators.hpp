#pragma once

/// @file operators.hpp
/// @brief Roulette-wheel selection, crossover and mutation.
///
/// All operators are pure functions of their arguments. Where randomness is
/// needed the caller passes the generator; everything else (cut points, swap
/// positions, the wheel draw) is an explicit argument so the operators can be
/// tested against hand-computed cases.

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "seedga/encoding.hpp"
#include "seedga/problems.hpp"
#include "seedga/rng.hpp"

namespace seedga {

/// Fitness-proportional wheel over lower-is-better fitness. Each individual
/// gets value 1/f; its slice of [0, 1) is value / total.
struct SelectionWheel {
    std::vector<double> values;
    double total = 0;
    std::vector<double> probabilities;
    /// Running sum of probabilities, last element pinned to exactly 1.
    std::vector<double> cumulative;

    std::size_t size() const noexcept { return values.size(); }
};

/// Throws DomainError when empty or when any fitness is <= 0 or not finite.
SelectionWheel build_wheel(std::span<const double> fitnesses);

/// Smallest i with r < cumulative[i] (0-based). Throws DomainError unless
/// 0 <= r < 1.
std::size_t spin(const SelectionWheel& wheel, double r);

enum class CrossoverOperator { ox1, pmx, single_point };
enum class MutationOperator { swap, random_reset };

std::string_view to_string(CrossoverOperator op);
std::string_view to_string(MutationOperator op);
/// "ox1" | "pmx" | "single-point". Throws ConfigError.
CrossoverOperator parse_crossover_operator(std::string_view name);
/// "swap" | "random-reset". Throws ConfigError.
MutationOperator parse_mutation_operator(std::string_view name);

struct CrossoverSpec {
    CrossoverOperator op = CrossoverOperator::ox1;
    double rate = 0.9;

    friend bool operator==(const CrossoverSpec&, const CrossoverSpec&) = default;
};

/// Applied per individual: with probability `rate` one swap / reset.
struct MutationSpec {
    MutationOperator op = MutationOperator::swap;
    double rate = 0.2;

    friend bool operator==(const MutationSpec&, const MutationSpec&) = default;
};

template <class Chromosome>
using ChildPair = std::pair<Chromosome, Chromosome>;

/// OX1. Child a keeps a's genes in [cut1, cut2) and fills the remaining
/// slots left to right with b's genes in b's order, skipping those already
/// present; child b is symmetric. Throws ValidationError when the parents
/// are not permutations of the same places, DomainError on bad cuts.
ChildPair<PermutationChromosome> order_crossover(const PermutationChromosome& a,
                                                 const PermutationChromosome& b, std::size_t cut1,
                                                 std::size_t cut2);

/// PMX. Child a takes a's segment [cut1, cut2) and b's genes elsewhere,
/// repairing collisions through the segment mapping. Same errors as OX1.
ChildPair<PermutationChromosome> pmx_crossover(const PermutationChromosome& a,
                                               const PermutationChromosome& b, std::size_t cut1,
                                               std::size_t cut2);

/// Exchanges the tails from `cut` onward. Only safe for strings. Throws
/// ValidationError on a length mismatch, DomainError if cut > length.
ChildPair<StringChromosome> single_point_crossover(const StringChromosome& a,
                                                   const StringChromosome& b, std::size_t cut);

/// Throws DomainError on an out-of-range position.
PermutationChromosome swap_mutation(const PermutationChromosome& chromosome, std::size_t i,
                                    std::size_t j);

/// Replaces one character with a uniform alphabet draw (one rng.below call).
/// The draw may equal the old character. Throws DomainError on an
/// out-of-range position.
StringChromosome random_reset_mutation(const StringChromosome& chromosome, std::size_t position,
                                       Rng& rng, const Alphabet& alphabet);

} // namespace seedga
