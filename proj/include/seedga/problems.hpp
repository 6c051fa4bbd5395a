#pragma once

/// @file problems.hpp
/// @brief Problem instances and their fitness functions.
///
/// Both fitness functions are oriented lower-is-better. Inversion for
/// selection happens in the selection wheel, not here.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedga/encoding.hpp"

namespace seedga {

/// Symmetric, zero-diagonal, finite, nonnegative n x n distances.
class DistanceMatrix {
  public:
    /// Row-major entries of an n x n matrix. Throws InvalidInstanceError when
    /// n < 2 or the entry count is wrong, DomainError on a negative or
    /// non-finite entry or nonzero diagonal, ConflictError on asymmetry.
    DistanceMatrix(std::size_t size, std::vector<double> entries);

    static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return size_; }

    double operator()(std::size_t from, std::size_t to) const noexcept {
        return entries_[from * size_ + to];
    }
    double operator()(PlaceId from, PlaceId to) const noexcept {
        return (*this)(from.index, to.index);
    }

    /// Smallest off-diagonal entry.
    double min_off_diagonal() const noexcept;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

  private:
    std::size_t size_;
    std::vector<double> entries_;
};

class TspInstance {
  public:
    explicit TspInstance(DistanceMatrix matrix) : matrix_(std::move(matrix)) {}

    const DistanceMatrix& matrix() const noexcept { return matrix_; }
    std::size_t place_count() const noexcept { return matrix_.size(); }
    PlaceId home() const noexcept { return kHome; }

  private:
    DistanceMatrix matrix_;
};

/// An ordered set of distinct characters.
class Alphabet {
  public:
    /// Duplicates are dropped, first occurrence wins. Throws
    /// InvalidInstanceError when empty.
    explicit Alphabet(std::string_view characters);

    /// The 95 printable 7-bit characters, space through tilde.
    static Alphabet printable_ascii();

    std::size_t size() const noexcept { return characters_.size(); }
    char operator[](std::size_t i) const noexcept { return characters_[i]; }
    bool contains(char c) const noexcept;
    const std::string& characters() const noexcept { return characters_; }

  private:
    std::string characters_;
};

class TargetStringInstance {
  public:
    /// Throws InvalidInstanceError when target is empty or uses a character
    /// outside the alphabet.
    TargetStringInstance(std::string target, Alphabet alphabet);

    const std::string& target() const noexcept { return target_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

  private:
    std::string target_;
    Alphabet alphabet_;
};

/// Closed tour length of the chromosome's home-anchored tour. Throws
/// ValidationError on an invalid chromosome.
double tsp_fitness(const TspInstance& instance, const PermutationChromosome& chromosome);

/// Hamming distance to the target. Throws ValidationError on length mismatch.
std::size_t string_fitness(const TargetStringInstance& instance, const StringChromosome& chromosome);

struct DistanceEdge {
    PlaceId from;
    PlaceId to;
    double distance = 0;

    friend bool operator==(const DistanceEdge&, const DistanceEdge&) = default;
};

/// Builds a matrix from undirected edges. place_count defaults to the
/// highest place mentioned. Throws DomainError (negative, non-finite or
/// self edge), ConflictError (same pair, different distance) or
/// IncompleteInstanceError (some pair uncovered, named in the message).
DistanceMatrix matrix_from_edges(std::span<const DistanceEdge> edges,
                                 std::optional<std::size_t> place_count = std::nullopt);

/// Parses `From,To,Distance` CSV with P<k> labels. Extra columns such as a
/// leading serial number are ignored. Throws ParseError on malformed text,
/// otherwise as matrix_from_edges.
std::vector<DistanceEdge> parse_distance_edges(std::istream& in);

DistanceMatrix load_distance_edges(std::istream& in);
DistanceMatrix load_distance_edges_file(const std::string& path);

/// Upper-triangle edges, ordered by (from, to).
std::vector<DistanceEdge> edges_of(const DistanceMatrix& matrix);

/// `From,To,Distance` CSV, one row per unordered pair.
std::string write_distance_edges(const DistanceMatrix& matrix);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

} // namespace seedga
