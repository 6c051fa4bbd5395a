#include "seedga/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seedga/errors.hpp"

namespace seedga {

namespace {

void require_same_places(const PermutationChromosome& a, const PermutationChromosome& b) {
    if (a.size() != b.size()) {
        throw ValidationError("parents differ in length: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
    auto sa = a.genes;
    auto sb = b.genes;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb || std::adjacent_find(sa.begin(), sa.end()) != sa.end()) {
        throw ValidationError("parents are not permutations of the same places");
    }
}

void require_cuts(std::size_t cut1, std::size_t cut2, std::size_t length) {
    if (cut1 > cut2 || cut2 > length) {
        throw DomainError("crossover cuts (" + std::to_string(cut1) + ", " + std::to_string(cut2) +
                          ") must satisfy 0 <= cut1 <= cut2 <= " + std::to_string(length));
    }
}

PermutationChromosome ox1_child(const PermutationChromosome& keep, const PermutationChromosome& donor,
                                std::size_t cut1, std::size_t cut2) {
    PermutationChromosome child = keep;
    auto in_segment = [&](PlaceId g) {
        return std::find(keep.genes.begin() + cut1, keep.genes.begin() + cut2, g) !=
               keep.genes.begin() + cut2;
    };
    std::size_t slot = 0;
    for (auto gene : donor.genes) {
        if (in_segment(gene)) {
            continue;
        }
        if (slot == cut1) {
            slot = cut2;
        }
        child.genes[slot++] = gene;
    }
    return child;
}

PermutationChromosome pmx_child(const PermutationChromosome& keep, const PermutationChromosome& donor,
                                std::size_t cut1, std::size_t cut2) {
    PermutationChromosome child = donor;
    auto position_in_keep = [&](PlaceId g) -> std::size_t {
        auto it = std::find(keep.genes.begin() + cut1, keep.genes.begin() + cut2, g);
        return it == keep.genes.begin() + cut2 ? keep.size()
                                               : static_cast<std::size_t>(it - keep.genes.begin());
    };
    for (std::size_t k = cut1; k < cut2; ++k) {
        child.genes[k] = keep.genes[k];
    }
    for (std::size_t k = 0; k < donor.size(); ++k) {
        if (k >= cut1 && k < cut2) {
            continue;
        }
        PlaceId gene = donor.genes[k];
        // Follow keep[p] -> donor[p] until the gene is outside keep's segment.
        for (auto p = position_in_keep(gene); p != keep.size(); p = position_in_keep(gene)) {
            gene = donor.genes[p];
        }
        child.genes[k] = gene;
    }
    return child;
}

} // namespace

SelectionWheel build_wheel(std::span<const double> fitnesses) {
    if (fitnesses.empty()) {
        throw DomainError("selection wheel needs at least one individual");
    }
    SelectionWheel wheel;
    wheel.values.reserve(fitnesses.size());
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        const double f = fitnesses[i];
        if (!(f > 0) || !std::isfinite(f)) {
            throw DomainError("fitness of individual " + std::to_string(i) +
                              " must be finite and > 0 for the selection wheel, got " +
                              format_number(f));
        }
        wheel.values.push_back(1.0 / f);
        wheel.total += wheel.values.back();
    }
    double running = 0;
    for (double v : wheel.values) {
        wheel.probabilities.push_back(v / wheel.total);
        running += wheel.probabilities.back();
        wheel.cumulative.push_back(running);
    }
    wheel.cumulative.back() = 1.0;
    return wheel;
}

std::size_t spin(const SelectionWheel& wheel, double r) {
    if (!(r >= 0 && r < 1)) {
        throw DomainError("wheel draw must lie in [0, 1), got " + format_number(r));
    }
    auto it = std::upper_bound(wheel.cumulative.begin(), wheel.cumulative.end(), r);
    if (it == wheel.cumulative.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - wheel.cumulative.begin());
}

std::string_view to_string(CrossoverOperator op) {
    switch (op) {
    case CrossoverOperator::ox1:
        return "ox1";
    case CrossoverOperator::pmx:
        return "pmx";
    case CrossoverOperator::single_point:
        return "single-point";
    }
    return "unknown";
}

std::string_view to_string(MutationOperator op) {
    switch (op) {
    case MutationOperator::swap:
        return "swap";
    case MutationOperator::random_reset:
        return "random-reset";
    }
    return "unknown";
}

CrossoverOperator parse_crossover_operator(std::string_view name) {
    for (auto op : {CrossoverOperator::ox1, CrossoverOperator::pmx, CrossoverOperator::single_point}) {
        if (name == to_string(op)) {
            return op;
        }
    }
    throw ConfigError("unknown crossover operator '" + std::string(name) +
                      "', expected ox1, pmx or single-point");
}

MutationOperator parse_mutation_operator(std::string_view name) {
    for (auto op : {MutationOperator::swap, MutationOperator::random_reset}) {
        if (name == to_string(op)) {
            return op;
        }
    }
    throw ConfigError("unknown mutation operator '" + std::string(name) +
                      "', expected swap or random-reset");
}

ChildPair<PermutationChromosome> order_crossover(const PermutationChromosome& a,
                                                 const PermutationChromosome& b, std::size_t cut1,
                                                 std::size_t cut2) {
    require_same_places(a, b);
    require_cuts(cut1, cut2, a.size());
    return {ox1_child(a, b, cut1, cut2), ox1_child(b, a, cut1, cut2)};
}

ChildPair<PermutationChromosome> pmx_crossover(const PermutationChromosome& a,
                                               const PermutationChromosome& b, std::size_t cut1,
                                               std::size_t cut2) {
    require_same_places(a, b);
    require_cuts(cut1, cut2, a.size());
    return {pmx_child(a, b, cut1, cut2), pmx_child(b, a, cut1, cut2)};
}

ChildPair<StringChromosome> single_point_crossover(const StringChromosome& a,
                                                   const StringChromosome& b, std::size_t cut) {
    if (a.size() != b.size()) {
        throw ValidationError("parents differ in length: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
    if (cut > a.size()) {
        throw DomainError("crossover cut " + std::to_string(cut) + " exceeds length " +
                          std::to_string(a.size()));
    }
    StringChromosome child_a{a.genes.substr(0, cut) + b.genes.substr(cut)};
    StringChromosome child_b{b.genes.substr(0, cut) + a.genes.substr(cut)};
    return {std::move(child_a), std::move(child_b)};
}

PermutationChromosome swap_mutation(const PermutationChromosome& chromosome, std::size_t i,
                                    std::size_t j) {
    if (i >= chromosome.size() || j >= chromosome.size()) {
        throw DomainError("swap positions (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for length " + std::to_string(chromosome.size()));
    }
    PermutationChromosome mutated = chromosome;
    std::swap(mutated.genes[i], mutated.genes[j]);
    return mutated;
}

StringChromosome random_reset_mutation(const StringChromosome& chromosome, std::size_t position,
                                       Rng& rng, const Alphabet& alphabet) {
    if (position >= chromosome.size()) {
        throw DomainError("reset position " + std::to_string(position) + " out of range for length " +
                          std::to_string(chromosome.size()));
    }
    StringChromosome mutated = chromosome;
    mutated.genes[position] = alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))];
    return mutated;
}

} // namespace seedga
