#include "seedga/engine.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace seedga {

namespace {

bool is_rate(double r) { return r >= 0 && r <= 1; }

} // namespace

std::vector<std::string> config_violations(const GAConfig& config) {
    std::vector<std::string> v;
    if (config.population_size < 2) {
        v.push_back("population_size must be >= 2, got " + std::to_string(config.population_size));
    }
    if (config.elitism_count >= config.population_size) {
        v.push_back("elitism_count must be < population_size, got " +
                    std::to_string(config.elitism_count));
    }
    if (!is_rate(config.crossover.rate)) {
        v.push_back("crossover.rate must lie in [0, 1], got " + format_number(config.crossover.rate));
    }
    if (!is_rate(config.mutation.rate)) {
        v.push_back("mutation.rate must lie in [0, 1], got " + format_number(config.mutation.rate));
    }
    const auto& term = config.termination;
    if (term.max_generations < 1) {
        v.push_back("termination.max_generations must be >= 1");
    }
    if (term.fitness_threshold && !std::isfinite(*term.fitness_threshold)) {
        v.push_back("termination.fitness_threshold must be finite");
    }
    if (term.stagnation_window && *term.stagnation_window < 1) {
        v.push_back("termination.stagnation_window must be >= 1");
    }
    if (term.wall_clock_budget && term.wall_clock_budget->count() <= 0) {
        v.push_back("termination.wall_clock_ms must be > 0");
    }
    return v;
}

std::string_view to_string(TerminationReason reason) {
    switch (reason) {
    case TerminationReason::exact_optimum:
        return "exact_optimum";
    case TerminationReason::fitness_threshold:
        return "fitness_threshold";
    case TerminationReason::stagnation:
        return "stagnation";
    case TerminationReason::wall_clock:
        return "wall_clock";
    case TerminationReason::max_generations:
        return "max_generations";
    }
    return "unknown";
}

// TSP

void ProblemTraits<TspInstance>::check(const GAConfig& config, const TspInstance&) {
    if (config.crossover.op == CrossoverOperator::single_point) {
        throw ConfigError("crossover 'single-point' breaks permutation chromosomes; use ox1 or pmx");
    }
    if (config.mutation.op != MutationOperator::swap) {
        throw ConfigError("mutation '" + std::string(to_string(config.mutation.op)) +
                          "' does not apply to tours; use swap");
    }
}

PermutationChromosome ProblemTraits<TspInstance>::random(const TspInstance& problem, Rng& rng) {
    return random_permutation(problem.place_count(), rng);
}

double ProblemTraits<TspInstance>::fitness(const TspInstance& problem, const Chromosome& c) {
    return tsp_fitness(problem, c);
}

bool ProblemTraits<TspInstance>::valid(const TspInstance& problem, const Chromosome& c) {
    return validate_permutation(c, problem.place_count()).valid();
}

ChildPair<PermutationChromosome> ProblemTraits<TspInstance>::crossover(const CrossoverSpec& spec,
                                                                       const Chromosome& a,
                                                                       const Chromosome& b, Rng& rng) {
    auto cut1 = static_cast<std::size_t>(rng.below(a.size() + 1));
    auto cut2 = static_cast<std::size_t>(rng.below(a.size() + 1));
    if (cut1 > cut2) {
        std::swap(cut1, cut2);
    }
    return spec.op == CrossoverOperator::pmx ? pmx_crossover(a, b, cut1, cut2)
                                             : order_crossover(a, b, cut1, cut2);
}

PermutationChromosome ProblemTraits<TspInstance>::mutate(const MutationSpec&, const Chromosome& c,
                                                         const TspInstance&, Rng& rng) {
    const auto i = static_cast<std::size_t>(rng.below(c.size()));
    const auto j = static_cast<std::size_t>(rng.below(c.size()));
    return swap_mutation(c, i, j);
}

std::string ProblemTraits<TspInstance>::render(const Chromosome& c) {
    return format_chromosome_tour(c);
}

// Target string

void ProblemTraits<TargetStringInstance>::check(const GAConfig& config, const TargetStringInstance&) {
    if (config.crossover.op != CrossoverOperator::single_point) {
        throw ConfigError("crossover '" + std::string(to_string(config.crossover.op)) +
                          "' needs permutation chromosomes; use single-point for strings");
    }
    if (config.mutation.op != MutationOperator::random_reset) {
        throw ConfigError("mutation 'swap' does not apply to strings; use random-reset");
    }
}

StringChromosome ProblemTraits<TargetStringInstance>::random(const TargetStringInstance& problem,
                                                             Rng& rng) {
    const auto& alphabet = problem.alphabet();
    StringChromosome c;
    c.genes.reserve(problem.target().size());
    for (std::size_t i = 0; i < problem.target().size(); ++i) {
        c.genes.push_back(alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))]);
    }
    return c;
}

double ProblemTraits<TargetStringInstance>::fitness(const TargetStringInstance& problem,
                                                    const Chromosome& c) {
    return static_cast<double>(string_fitness(problem, c));
}

bool ProblemTraits<TargetStringInstance>::valid(const TargetStringInstance& problem,
                                                const Chromosome& c) {
    return c.size() == problem.target().size() &&
           std::all_of(c.genes.begin(), c.genes.end(),
                       [&](char ch) { return problem.alphabet().contains(ch); });
}

ChildPair<StringChromosome> ProblemTraits<TargetStringInstance>::crossover(const CrossoverSpec&,
                                                                           const Chromosome& a,
                                                                           const Chromosome& b,
                                                                           Rng& rng) {
    return single_point_crossover(a, b, static_cast<std::size_t>(rng.below(a.size() + 1)));
}

StringChromosome ProblemTraits<TargetStringInstance>::mutate(const MutationSpec&, const Chromosome& c,
                                                             const TargetStringInstance& problem,
                                                             Rng& rng) {
    const auto position = static_cast<std::size_t>(rng.below(c.size()));
    return random_reset_mutation(c, position, rng, problem.alphabet());
}

std::string ProblemTraits<TargetStringInstance>::render(const Chromosome& c) { return c.genes; }

} // namespace seedga
