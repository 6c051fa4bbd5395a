#include "seedga/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "seedga/errors.hpp"

namespace seedga {

std::string place_label(PlaceId place) { return "P" + std::to_string(place.index + 1); }

PlaceId parse_place_label(std::string_view label) {
    if (label.size() < 2 || (label.front() != 'P' && label.front() != 'p')) {
        throw ParseError("bad place label '" + std::string(label) + "', expected P<k>");
    }
    std::size_t number = 0;
    const auto* first = label.data() + 1;
    const auto* last = label.data() + label.size();
    auto [ptr, ec] = std::from_chars(first, last, number);
    if (ec != std::errc{} || ptr != last || number == 0) {
        throw ParseError("bad place label '" + std::string(label) + "', expected P<k>");
    }
    return PlaceId{number - 1};
}

PermutationChromosome PermutationChromosome::from_numbers(std::initializer_list<std::size_t> numbers) {
    PermutationChromosome chromosome;
    chromosome.genes.reserve(numbers.size());
    for (auto number : numbers) {
        chromosome.genes.push_back(PlaceId{number - 1});
    }
    return chromosome;
}

std::string_view to_string(PermutationFault fault) {
    switch (fault) {
    case PermutationFault::wrong_length:
        return "wrong length";
    case PermutationFault::home_present:
        return "home place present";
    case PermutationFault::out_of_range:
        return "place out of range";
    case PermutationFault::duplicate_gene:
        return "duplicate place";
    case PermutationFault::missing_gene:
        return "missing place";
    }
    return "unknown";
}

bool PermutationVerdict::has(PermutationFault fault) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [fault](const PermutationViolation& v) { return v.fault == fault; });
}

std::string PermutationVerdict::describe() const {
    if (valid()) {
        return "valid";
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < violations.size(); ++k) {
        const auto& v = violations[k];
        if (k > 0) {
            out << "; ";
        }
        out << to_string(v.fault);
        if (v.fault == PermutationFault::wrong_length) {
            out << " (" << v.value << ")";
        } else {
            out << " " << place_label(PlaceId{v.value});
        }
    }
    return out.str();
}

PermutationVerdict validate_permutation(const PermutationChromosome& chromosome,
                                        std::size_t place_count) {
    PermutationVerdict verdict;
    const std::size_t expected = place_count == 0 ? 0 : place_count - 1;
    if (chromosome.size() != expected) {
        verdict.violations.push_back({PermutationFault::wrong_length, chromosome.size()});
    }

    std::vector<std::size_t> seen(place_count, 0);
    for (auto gene : chromosome.genes) {
        if (gene == kHome) {
            verdict.violations.push_back({PermutationFault::home_present, gene.index});
        } else if (gene.index >= place_count) {
            verdict.violations.push_back({PermutationFault::out_of_range, gene.index});
        } else if (++seen[gene.index] == 2) {
            verdict.violations.push_back({PermutationFault::duplicate_gene, gene.index});
        }
    }
    for (std::size_t place = 1; place < place_count; ++place) {
        if (seen[place] == 0) {
            verdict.violations.push_back({PermutationFault::missing_gene, place});
        }
    }
    return verdict;
}

void require_valid_permutation(const PermutationChromosome& chromosome, std::size_t place_count) {
    auto verdict = validate_permutation(chromosome, place_count);
    if (!verdict.valid()) {
        throw ValidationError("invalid permutation chromosome: " + verdict.describe());
    }
}

PermutationChromosome random_permutation(std::size_t place_count, Rng& rng) {
    if (place_count < 2) {
        throw InvalidInstanceError("a tour needs at least 2 places, got " + std::to_string(place_count));
    }
    PermutationChromosome chromosome;
    chromosome.genes.reserve(place_count - 1);
    for (std::size_t place = 1; place < place_count; ++place) {
        chromosome.genes.push_back(PlaceId{place});
    }
    for (std::size_t i = chromosome.genes.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(chromosome.genes[i - 1], chromosome.genes[j]);
    }
    return chromosome;
}

std::vector<PlaceId> tour_of(const PermutationChromosome& chromosome) {
    std::vector<PlaceId> tour;
    tour.reserve(chromosome.size() + 2);
    tour.push_back(kHome);
    tour.insert(tour.end(), chromosome.genes.begin(), chromosome.genes.end());
    tour.push_back(kHome);
    return tour;
}

std::string format_tour(std::span<const PlaceId> tour, std::string_view separator) {
    std::string text;
    for (std::size_t k = 0; k < tour.size(); ++k) {
        if (k > 0) {
            text += separator;
        }
        text += place_label(tour[k]);
    }
    return text;
}

std::string format_chromosome_tour(const PermutationChromosome& chromosome) {
    return format_tour(tour_of(chromosome));
}

PermutationChromosome parse_chromosome_tour(std::string_view text, std::string_view separator) {
    std::vector<PlaceId> tour;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(separator, start);
        tour.push_back(parse_place_label(text.substr(start, end - start)));
        if (end == std::string_view::npos) {
            break;
        }
        start = end + separator.size();
    }
    if (tour.size() < 2 || tour.front() != kHome || tour.back() != kHome) {
        throw ParseError("tour '" + std::string(text) + "' must start and end at P1");
    }
    return PermutationChromosome{std::vector<PlaceId>(tour.begin() + 1, tour.end() - 1)};
}

} // namespace seedga
