#pragma once

/// @file runlog_io.hpp
/// @brief Run log serialization: per-generation CSV and JSON summary.
///
/// CSV header is `generation,best_fitness,mean_fitness,best_tour`. Numbers
/// use the shortest text that parses back to the same double, so the CSV
/// round-trips losslessly. best_tour is the home-anchored tour (P1-..-P1)
/// for TSP and the candidate string for the string problem, quoted per
/// RFC 4180 when needed.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "seedga/config.hpp"
#include "seedga/engine.hpp"

namespace seedga {

inline constexpr std::string_view kGenerationCsvHeader =
    "generation,best_fitness,mean_fitness,best_tour";

/// Quotes a CSV field if it contains a comma, quote, newline or edge space.
std::string csv_field(std::string_view text);

/// Splits one CSV record, honoring quoted fields. Throws ParseError.
std::vector<std::string> split_csv_record(std::string_view line);

struct GenerationRecord {
    std::size_t generation = 0;
    double best_fitness = 0;
    double mean_fitness = 0;
    std::string best_tour;
};

std::vector<GenerationRecord> parse_generation_csv(std::istream& in);

/// Inverse of the best_tour rendering.
template <class Chromosome>
Chromosome chromosome_from_text(std::string_view text);

template <>
PermutationChromosome chromosome_from_text<PermutationChromosome>(std::string_view text);
template <>
StringChromosome chromosome_from_text<StringChromosome>(std::string_view text);

template <class Problem>
std::string generation_csv(const RunLog<ChromosomeOf<Problem>>& log) {
    std::string text(kGenerationCsvHeader);
    text += "\n";
    for (const auto& s : log.history) {
        text += std::to_string(s.generation) + "," + format_number(s.best_fitness) + "," +
                format_number(s.mean_fitness) + "," +
                csv_field(ProblemTraits<Problem>::render(s.best_chromosome)) + "\n";
    }
    return text;
}

template <class Chromosome>
std::vector<GenerationStats<Chromosome>> parse_generation_stats(std::istream& in) {
    std::vector<GenerationStats<Chromosome>> stats;
    for (auto& r : parse_generation_csv(in)) {
        stats.push_back({r.generation, r.best_fitness, r.mean_fitness,
                         chromosome_from_text<Chromosome>(r.best_tour)});
    }
    return stats;
}

template <class Problem>
nlohmann::json run_summary(const RunConfigDocument& document,
                           const RunLog<ChromosomeOf<Problem>>& log) {
    nlohmann::json best{{"fitness", log.best.fitness.value_or(0.0)},
                        {"chromosome", ProblemTraits<Problem>::render(log.best.chromosome)}};
    return {{"config", to_json(document)},
            {"termination_reason", std::string(to_string(log.reason))},
            {"generations", log.generations()},
            {"evaluations", log.evaluations},
            {"best", best}};
}

} // namespace seedga
