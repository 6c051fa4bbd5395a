#include "seedga/problems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "seedga/errors.hpp"

namespace seedga {

namespace {

std::string pair_label(std::size_t a, std::size_t b) {
    return place_label(PlaceId{a}) + "-" + place_label(PlaceId{b});
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(',', start);
        fields.push_back(trim(line.substr(start, end - start)));
        if (end == std::string_view::npos) {
            return fields;
        }
        start = end + 1;
    }
}

double parse_distance(std::string_view text, std::size_t line_number) {
    double value = 0;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParseError("line " + std::to_string(line_number) + ": bad distance '" +
                         std::string(text) + "'");
    }
    return value;
}

} // namespace

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
    if (size_ < 2) {
        throw InvalidInstanceError("distance matrix needs at least 2 places, got " +
                                   std::to_string(size_));
    }
    if (entries_.size() != size_ * size_) {
        throw InvalidInstanceError("distance matrix of size " + std::to_string(size_) + " needs " +
                                   std::to_string(size_ * size_) + " entries, got " +
                                   std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            const double d = (*this)(i, j);
            if (!std::isfinite(d) || d < 0) {
                throw DomainError("distance " + pair_label(i, j) + " must be finite and >= 0");
            }
            if (i == j && d != 0) {
                throw DomainError("diagonal entry " + pair_label(i, i) + " must be 0");
            }
            if (d != (*this)(j, i)) {
                throw ConflictError("distance matrix is not symmetric at " + pair_label(i, j));
            }
        }
    }
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    std::vector<double> entries;
    entries.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw InvalidInstanceError("distance matrix rows must be square");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DistanceMatrix(rows.size(), std::move(entries));
}

double DistanceMatrix::min_off_diagonal() const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = i + 1; j < size_; ++j) {
            best = std::min(best, (*this)(i, j));
        }
    }
    return best;
}

Alphabet::Alphabet(std::string_view characters) {
    for (char c : characters) {
        if (characters_.find(c) == std::string::npos) {
            characters_.push_back(c);
        }
    }
    if (characters_.empty()) {
        throw InvalidInstanceError("alphabet must not be empty");
    }
}

Alphabet Alphabet::printable_ascii() {
    std::string chars;
    for (char c = ' '; c <= '~'; ++c) {
        chars.push_back(c);
    }
    return Alphabet(chars);
}

bool Alphabet::contains(char c) const noexcept { return characters_.find(c) != std::string::npos; }

TargetStringInstance::TargetStringInstance(std::string target, Alphabet alphabet)
    : target_(std::move(target)), alphabet_(std::move(alphabet)) {
    if (target_.empty()) {
        throw InvalidInstanceError("target string must not be empty");
    }
    for (std::size_t i = 0; i < target_.size(); ++i) {
        if (!alphabet_.contains(target_[i])) {
            throw InvalidInstanceError("target character '" + std::string(1, target_[i]) +
                                       "' at index " + std::to_string(i) + " is not in the alphabet");
        }
    }
}

double tsp_fitness(const TspInstance& instance, const PermutationChromosome& chromosome) {
    require_valid_permutation(chromosome, instance.place_count());
    const auto& d = instance.matrix();
    double length = 0;
    PlaceId previous = instance.home();
    for (auto place : chromosome.genes) {
        length += d(previous, place);
        previous = place;
    }
    return length + d(previous, instance.home());
}

std::size_t string_fitness(const TargetStringInstance& instance, const StringChromosome& chromosome) {
    const auto& target = instance.target();
    if (chromosome.size() != target.size()) {
        throw ValidationError("string chromosome has length " + std::to_string(chromosome.size()) +
                              ", target has length " + std::to_string(target.size()));
    }
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        mismatches += chromosome.genes[i] != target[i] ? 1 : 0;
    }
    return mismatches;
}

DistanceMatrix matrix_from_edges(std::span<const DistanceEdge> edges,
                                 std::optional<std::size_t> place_count) {
    std::size_t n = place_count.value_or(0);
    if (!place_count) {
        for (const auto& e : edges) {
            n = std::max({n, e.from.index + 1, e.to.index + 1});
        }
    }
    if (n < 2) {
        throw InvalidInstanceError("edge list declares fewer than 2 places");
    }

    std::vector<double> entries(n * n, 0.0);
    std::vector<bool> covered(n * n, false);
    for (const auto& e : edges) {
        const auto a = e.from.index;
        const auto b = e.to.index;
        if (a >= n || b >= n) {
            throw InvalidInstanceError("edge " + pair_label(a, b) + " exceeds " + std::to_string(n) +
                                       " declared places");
        }
        if (a == b) {
            throw DomainError("self edge " + pair_label(a, b));
        }
        if (!std::isfinite(e.distance) || e.distance < 0) {
            throw DomainError("distance " + pair_label(a, b) + " must be finite and >= 0, got " +
                              format_number(e.distance));
        }
        if (covered[a * n + b] && entries[a * n + b] != e.distance) {
            throw ConflictError("conflicting distances for " + pair_label(a, b) + ": " +
                                format_number(entries[a * n + b]) + " and " +
                                format_number(e.distance));
        }
        entries[a * n + b] = entries[b * n + a] = e.distance;
        covered[a * n + b] = covered[b * n + a] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!covered[i * n + j]) {
                throw IncompleteInstanceError("missing distance for pair " + pair_label(i, j));
            }
        }
    }
    return DistanceMatrix(n, std::move(entries));
}

std::vector<DistanceEdge> parse_distance_edges(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;
    std::optional<std::size_t> from_col, to_col, distance_col;
    std::size_t width = 0;
    std::vector<DistanceEdge> edges;

    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) {
            continue;
        }
        auto fields = split_commas(line);
        if (!from_col) {
            for (std::size_t k = 0; k < fields.size(); ++k) {
                if (fields[k] == "From") {
                    from_col = k;
                } else if (fields[k] == "To") {
                    to_col = k;
                } else if (fields[k] == "Distance") {
                    distance_col = k;
                }
            }
            if (!from_col || !to_col || !distance_col) {
                throw ParseError("line " + std::to_string(line_number) +
                                 ": header must name From, To and Distance columns");
            }
            width = fields.size();
            continue;
        }
        if (fields.size() != width) {
            throw ParseError("line " + std::to_string(line_number) + ": expected " +
                             std::to_string(width) + " fields, got " + std::to_string(fields.size()));
        }
        try {
            edges.push_back({parse_place_label(fields[*from_col]), parse_place_label(fields[*to_col]),
                             parse_distance(fields[*distance_col], line_number)});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    if (!from_col) {
        throw ParseError("empty edge list, expected a From,To,Distance header");
    }
    return edges;
}

DistanceMatrix load_distance_edges(std::istream& in) {
    const auto edges = parse_distance_edges(in);
    return matrix_from_edges(edges);
}

DistanceMatrix load_distance_edges_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open edge list '" + path + "'");
    }
    return load_distance_edges(in);
}

std::vector<DistanceEdge> edges_of(const DistanceMatrix& matrix) {
    std::vector<DistanceEdge> edges;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = i + 1; j < matrix.size(); ++j) {
            edges.push_back({PlaceId{i}, PlaceId{j}, matrix(i, j)});
        }
    }
    return edges;
}

std::string write_distance_edges(const DistanceMatrix& matrix) {
    std::string text = "From,To,Distance\n";
    for (const auto& e : edges_of(matrix)) {
        text += place_label(e.from) + "," + place_label(e.to) + "," + format_number(e.distance) + "\n";
    }
    return text;
}

std::string format_number(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

} // namespace seedga
