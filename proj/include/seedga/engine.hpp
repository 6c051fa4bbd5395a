#pragma once

/// @file engine.hpp
/// @brief Generational GA loop with elitism and roulette-wheel selection.
///
/// A run is fully determined by (config, problem): every random draw comes
/// from one Rng seeded with config.seed, in this order.
///
///  initialize   For each slot in order, one random chromosome
///               (TSP: Fisher-Yates; string: one below(|alphabet|) per char).
///  step         Elites are the elitism_count lowest-fitness members (ties by
///               position), copied unchanged. Then, until the population is
///               refilled, per pair:
///                 unit() -> parent 1 via spin, unit() -> parent 2 via spin,
///                 unit() < crossover.rate ? crossover : clone, where the
///                   crossover draws its cuts (permutation: two below(len+1)
///                   sorted ascending; string: one below(len+1)),
///                 for child 1 then child 2: unit() < mutation.rate ? mutate,
///                   where the mutation draws its positions (swap: two
///                   below(len); reset: below(len) then below(|alphabet|)).
///               When one slot remains, only child 1 is kept, but child 2's
///               mutation draw is still consumed.
///
/// Fitness 0 is the global lower bound for both problems; a generation whose
/// best is 0 ends the run before any wheel is built.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedga/encoding.hpp"
#include "seedga/errors.hpp"
#include "seedga/operators.hpp"
#include "seedga/problems.hpp"
#include "seedga/rng.hpp"

namespace seedga {

struct TerminationSpec {
    std::size_t max_generations = 100;
    /// Stop once best fitness <= threshold.
    std::optional<double> fitness_threshold;
    /// Stop once best fitness has not changed for this many generations.
    std::optional<std::size_t> stagnation_window;
    std::optional<std::chrono::milliseconds> wall_clock_budget;

    friend bool operator==(const TerminationSpec&, const TerminationSpec&) = default;
};

struct GAConfig {
    std::size_t population_size = 50;
    CrossoverSpec crossover{};
    MutationSpec mutation{};
    std::size_t elitism_count = 1;
    std::uint64_t seed = 1;
    TerminationSpec termination{};

    friend bool operator==(const GAConfig&, const GAConfig&) = default;
};

/// Every structural problem with the config, one message per violation.
/// Operator/problem compatibility is checked by the problem traits.
std::vector<std::string> config_violations(const GAConfig& config);

enum class TerminationReason {
    exact_optimum,
    fitness_threshold,
    stagnation,
    wall_clock,
    max_generations,
};

std::string_view to_string(TerminationReason reason);

template <class Chromosome>
struct GenerationStats {
    std::size_t generation = 0;
    double best_fitness = 0;
    double mean_fitness = 0;
    Chromosome best_chromosome;

    friend bool operator==(const GenerationStats&, const GenerationStats&) = default;
};

template <class Chromosome>
struct RunLog {
    GAConfig config;
    std::vector<GenerationStats<Chromosome>> history;
    /// Lowest fitness ever observed; earliest generation wins ties.
    Individual<Chromosome> best;
    TerminationReason reason = TerminationReason::max_generations;
    std::size_t evaluations = 0;

    std::size_t generations() const noexcept { return history.empty() ? 0 : history.size() - 1; }
};

/// Per-problem hooks used by the generic loop.
template <class Problem>
struct ProblemTraits;

template <>
struct ProblemTraits<TspInstance> {
    using Chromosome = PermutationChromosome;

    static void check(const GAConfig& config, const TspInstance& problem);
    static Chromosome random(const TspInstance& problem, Rng& rng);
    static double fitness(const TspInstance& problem, const Chromosome& c);
    static bool valid(const TspInstance& problem, const Chromosome& c);
    static ChildPair<Chromosome> crossover(const CrossoverSpec& spec, const Chromosome& a,
                                           const Chromosome& b, Rng& rng);
    static Chromosome mutate(const MutationSpec& spec, const Chromosome& c, const TspInstance& problem,
                             Rng& rng);
    static std::string render(const Chromosome& c);
};

template <>
struct ProblemTraits<TargetStringInstance> {
    using Chromosome = StringChromosome;

    static void check(const GAConfig& config, const TargetStringInstance& problem);
    static Chromosome random(const TargetStringInstance& problem, Rng& rng);
    static double fitness(const TargetStringInstance& problem, const Chromosome& c);
    static bool valid(const TargetStringInstance& problem, const Chromosome& c);
    static ChildPair<Chromosome> crossover(const CrossoverSpec& spec, const Chromosome& a,
                                           const Chromosome& b, Rng& rng);
    static Chromosome mutate(const MutationSpec& spec, const Chromosome& c,
                             const TargetStringInstance& problem, Rng& rng);
    static std::string render(const Chromosome& c);
};

template <class Problem>
using ChromosomeOf = typename ProblemTraits<Problem>::Chromosome;

/// Throws ConfigError listing every violation.
template <class Problem>
void validate_config(const GAConfig& config, const Problem& problem) {
    auto violations = config_violations(config);
    try {
        ProblemTraits<Problem>::check(config, problem);
    } catch (const ConfigError& e) {
        violations.emplace_back(e.what());
    }
    if (!violations.empty()) {
        std::string message = "invalid configuration:";
        for (const auto& v : violations) {
            message += "\n  - " + v;
        }
        throw ConfigError(message);
    }
}

template <class Problem>
Population<ChromosomeOf<Problem>> evaluate(Population<ChromosomeOf<Problem>> population,
                                           const Problem& problem) {
    for (auto& member : population.members) {
        member.fitness = ProblemTraits<Problem>::fitness(problem, member.chromosome);
    }
    return population;
}

template <class Problem>
Population<ChromosomeOf<Problem>> initialize(const GAConfig& config, const Problem& problem,
                                             Rng& rng) {
    validate_config(config, problem);
    Population<ChromosomeOf<Problem>> population;
    population.members.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        population.members.push_back({ProblemTraits<Problem>::random(problem, rng), std::nullopt});
    }
    return evaluate(std::move(population), problem);
}

namespace detail {

template <class Chromosome>
std::vector<double> fitnesses_of(const Population<Chromosome>& population) {
    std::vector<double> f;
    f.reserve(population.size());
    for (const auto& m : population.members) {
        if (!m.fitness) {
            throw DomainError("population member is not evaluated");
        }
        f.push_back(*m.fitness);
    }
    return f;
}

/// Member indices ordered by (fitness, position).
inline std::vector<std::size_t> ranking(std::span<const double> fitnesses) {
    std::vector<std::size_t> order(fitnesses.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return fitnesses[x] < fitnesses[y]; });
    return order;
}

} // namespace detail

/// One generation: elites, wheel-selected pairs, crossover, mutation,
/// evaluation. Requires an evaluated population with all fitness > 0.
template <class Problem>
Population<ChromosomeOf<Problem>> step(const Population<ChromosomeOf<Problem>>& population,
                                       const GAConfig& config, const Problem& problem, Rng& rng) {
    using Traits = ProblemTraits<Problem>;
    using Chromosome = ChromosomeOf<Problem>;

    const auto fitnesses = detail::fitnesses_of(population);
    const std::size_t target_size = population.size();

    Population<Chromosome> next;
    next.generation = population.generation + 1;
    next.members.reserve(target_size);

    const auto order = detail::ranking(fitnesses);
    for (std::size_t k = 0; k < std::min(config.elitism_count, target_size); ++k) {
        next.members.push_back(population.members[order[k]]);
    }

    const auto wheel = build_wheel(fitnesses);
    while (next.members.size() < target_size) {
        const auto& p1 = population.members[spin(wheel, rng.unit())].chromosome;
        const auto& p2 = population.members[spin(wheel, rng.unit())].chromosome;

        auto children = rng.unit() < config.crossover.rate
                            ? Traits::crossover(config.crossover, p1, p2, rng)
                            : ChildPair<Chromosome>{p1, p2};
        if (rng.unit() < config.mutation.rate) {
            children.first = Traits::mutate(config.mutation, children.first, problem, rng);
        }
        if (rng.unit() < config.mutation.rate) {
            children.second = Traits::mutate(config.mutation, children.second, problem, rng);
        }

        next.members.push_back({std::move(children.first), std::nullopt});
        if (next.members.size() < target_size) {
            next.members.push_back({std::move(children.second), std::nullopt});
        }
    }
    return evaluate(std::move(next), problem);
}

template <class Chromosome>
GenerationStats<Chromosome> summarize(const Population<Chromosome>& population) {
    const auto fitnesses = detail::fitnesses_of(population);
    const auto best = static_cast<std::size_t>(
        std::min_element(fitnesses.begin(), fitnesses.end()) - fitnesses.begin());
    double sum = 0;
    for (double f : fitnesses) {
        sum += f;
    }
    return {population.generation, fitnesses[best], sum / static_cast<double>(fitnesses.size()),
            population.members[best].chromosome};
}

/// True iff the last `window` best values span at most `tolerance`.
/// False when the history is shorter than the window or window == 0.
template <class Chromosome>
bool converged(std::span<const GenerationStats<Chromosome>> history, std::size_t window,
               double tolerance) {
    if (window == 0 || history.size() < window) {
        return false;
    }
    auto tail = history.last(window);
    auto [lo, hi] = std::minmax_element(
        tail.begin(), tail.end(),
        [](const auto& x, const auto& y) { return x.best_fitness < y.best_fitness; });
    return hi->best_fitness - lo->best_fitness <= tolerance;
}

template <class Chromosome>
using GenerationObserver = std::function<void(const GenerationStats<Chromosome>&)>;

template <class Problem>
RunLog<ChromosomeOf<Problem>> run(const GAConfig& config, const Problem& problem,
                                  const GenerationObserver<ChromosomeOf<Problem>>& observer = {}) {
    using Chromosome = ChromosomeOf<Problem>;
    validate_config(config, problem);

    const auto started = std::chrono::steady_clock::now();
    Rng rng(config.seed);
    RunLog<Chromosome> log;
    log.config = config;

    auto population = initialize(config, problem, rng);
    log.evaluations += population.size();

    const auto& term = config.termination;
    while (true) {
        log.history.push_back(summarize(population));
        const auto& stats = log.history.back();
        if (!log.best.fitness || stats.best_fitness < *log.best.fitness) {
            log.best = {stats.best_chromosome, stats.best_fitness};
        }
        if (observer) {
            observer(stats);
        }

        std::optional<TerminationReason> reason;
        if (stats.best_fitness <= 0) {
            reason = TerminationReason::exact_optimum;
        } else if (term.fitness_threshold && stats.best_fitness <= *term.fitness_threshold) {
            reason = TerminationReason::fitness_threshold;
        } else if (term.stagnation_window &&
                   converged(std::span<const GenerationStats<Chromosome>>(log.history),
                             *term.stagnation_window + 1, 0.0)) {
            reason = TerminationReason::stagnation;
        } else if (term.wall_clock_budget &&
                   std::chrono::steady_clock::now() - started >= *term.wall_clock_budget) {
            reason = TerminationReason::wall_clock;
        } else if (population.generation >= term.max_generations) {
            reason = TerminationReason::max_generations;
        }
        if (reason) {
            log.reason = *reason;
            return log;
        }

        population = step(population, config, problem, rng);
        log.evaluations += population.size();
    }
}

} // namespace seedga
