#pragma once

/// @file encoding.hpp
/// @brief Chromosome representations and their validity rules.
///
/// Places are 0-based indices; place 0 is the fixed home where every tour
/// starts and ends. A permutation chromosome lists the n-1 non-home places in
/// visiting order, so every valid chromosome is a valid tour with no repair.
/// Places render as P1..Pn (index + 1) only at the text boundary.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedga/rng.hpp"

namespace seedga {

struct PlaceId {
    std::size_t index = 0;

    friend constexpr auto operator<=>(PlaceId, PlaceId) = default;
};

inline constexpr PlaceId kHome{0};

/// "P<index+1>".
std::string place_label(PlaceId place);

/// Inverse of place_label. Throws ParseError on anything but `P<k>`, k >= 1.
PlaceId parse_place_label(std::string_view label);

struct PermutationChromosome {
    std::vector<PlaceId> genes;

    /// Builds a chromosome from 1-based place numbers as they are displayed,
    /// e.g. {2, 3, 5, 4, 6} for P2 P3 P5 P4 P6. No validation.
    static PermutationChromosome from_numbers(std::initializer_list<std::size_t> numbers);

    std::size_t size() const noexcept { return genes.size(); }

    friend auto operator<=>(const PermutationChromosome&, const PermutationChromosome&) = default;
};

struct StringChromosome {
    std::string genes;

    std::size_t size() const noexcept { return genes.size(); }

    friend auto operator<=>(const StringChromosome&, const StringChromosome&) = default;
};

/// Lower fitness is better. Unset until evaluated.
template <class Chromosome>
struct Individual {
    Chromosome chromosome;
    std::optional<double> fitness;

    friend bool operator==(const Individual&, const Individual&) = default;
};

template <class Chromosome>
struct Population {
    std::vector<Individual<Chromosome>> members;
    std::size_t generation = 0;

    std::size_t size() const noexcept { return members.size(); }
};

enum class PermutationFault {
    wrong_length,
    home_present,
    out_of_range,
    duplicate_gene,
    missing_gene,
};

std::string_view to_string(PermutationFault fault);

struct PermutationViolation {
    PermutationFault fault;
    /// Offending place; for wrong_length this holds the observed length.
    std::size_t value = 0;

    friend bool operator==(const PermutationViolation&, const PermutationViolation&) = default;
};

struct PermutationVerdict {
    std::vector<PermutationViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool has(PermutationFault fault) const noexcept;
    std::string describe() const;
};

PermutationVerdict validate_permutation(const PermutationChromosome& chromosome,
                                        std::size_t place_count);

/// Throws ValidationError carrying describe() when the chromosome is invalid.
void require_valid_permutation(const PermutationChromosome& chromosome, std::size_t place_count);

/// Uniform over all (place_count-1)! orderings (Fisher-Yates, back to front,
/// one rng.below() call per position). Throws InvalidInstanceError if
/// place_count < 2.
PermutationChromosome random_permutation(std::size_t place_count, Rng& rng);

/// [home, genes..., home].
std::vector<PlaceId> tour_of(const PermutationChromosome& chromosome);

/// Joins place labels, e.g. "P1-P3-P2-P1".
std::string format_tour(std::span<const PlaceId> tour, std::string_view separator = "-");

/// Renders the home-anchored tour of a chromosome.
std::string format_chromosome_tour(const PermutationChromosome& chromosome);

/// Inverse of format_tour for a home-anchored tour string; returns the
/// chromosome between the two home visits. Throws ParseError.
PermutationChromosome parse_chromosome_tour(std::string_view text, std::string_view separator = "-");

} // namespace seedga
