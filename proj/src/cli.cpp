#include "seedga/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "seedga/errors.hpp"
#include "seedga/oracle.hpp"
#include "seedga/reproduce.hpp"
#include "seedga/runlog_io.hpp"

namespace seedga::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content)) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
}

struct RunOutcome {
    std::string csv;
    std::string summary;
    std::string line;
    bool reached = true;
};

template <class Problem>
RunOutcome run_one(const RunConfigDocument& document, const Problem& problem) {
    const auto log = run(document.ga, problem);
    RunOutcome outcome;
    outcome.csv = generation_csv<Problem>(log);
    outcome.summary = run_summary<Problem>(document, log).dump(2) + "\n";
    const auto& threshold = document.ga.termination.fitness_threshold;
    outcome.reached = !threshold || *log.best.fitness <= *threshold;

    std::ostringstream line;
    line << "seed " << document.ga.seed << ": best " << format_number(*log.best.fitness) << " "
         << ProblemTraits<Problem>::render(log.best.chromosome) << " after " << log.generations()
         << " generations (" << to_string(log.reason) << ")";
    outcome.line = line.str();
    return outcome;
}

template <class Problem>
std::vector<RunOutcome> run_all(const RunConfigDocument& base, const Problem& problem,
                                std::size_t runs) {
    std::vector<RunConfigDocument> documents(runs, base);
    for (std::size_t k = 0; k < runs; ++k) {
        documents[k].ga.seed = base.ga.seed + k;
    }
    std::vector<RunOutcome> outcomes(runs);
    std::vector<std::exception_ptr> failures(runs);
    {
        std::vector<std::jthread> workers;
        for (std::size_t k = 0; k < runs; ++k) {
            workers.emplace_back([&, k] {
                try {
                    outcomes[k] = run_one(documents[k], problem);
                } catch (...) {
                    failures[k] = std::current_exception();
                }
            });
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return outcomes;
}

} // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.runs < 1) {
            throw ConfigError("--runs must be >= 1");
        }
        const fs::path config_path(options.config_path);
        auto document = parse_run_config(read_file(config_path));
        apply_overrides(document, options.overrides);
        if (auto violations = config_violations(document.ga); !violations.empty()) {
            std::string message = "invalid configuration:";
            for (const auto& v : violations) {
                message += "\n  - " + v;
            }
            throw ConfigError(message);
        }

        std::vector<RunOutcome> outcomes;
        if (document.problem == ProblemKind::tsp) {
            fs::path instance_path(document.instance);
            if (instance_path.is_relative()) {
                instance_path = config_path.parent_path() / instance_path;
            }
            const TspInstance problem(load_distance_edges_file(instance_path.string()));
            validate_config(document.ga, problem);
            outcomes = run_all(document, problem, options.runs);
        } else {
            const TargetStringInstance problem(
                document.instance,
                document.alphabet ? Alphabet(*document.alphabet) : Alphabet::printable_ascii());
            validate_config(document.ga, problem);
            outcomes = run_all(document, problem, options.runs);
        }

        const fs::path out_dir(options.out_dir);
        fs::create_directories(out_dir);
        bool all_reached = true;
        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            const auto stem = "run_" + std::to_string(document.ga.seed + k);
            write_file(out_dir / (stem + ".csv"), outcomes[k].csv);
            write_file(out_dir / (stem + ".json"), outcomes[k].summary);
            out << outcomes[k].line << "\n";
            all_reached = all_reached && outcomes[k].reached;
        }
        return all_reached ? kExitSuccess : kExitUnreached;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_reproduce(bool as_json, std::ostream& out, std::ostream&) {
    const auto report = reproduce_worked_example();
    if (as_json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << render_text(report);
    }
    return report.passed() ? kExitSuccess : kExitUnreached;
}

int cmd_oracle(const std::string& matrix_path, std::ostream& out, std::ostream& err) {
    try {
        const TspInstance instance(load_distance_edges_file(matrix_path));
        const auto result = brute_force_tsp(instance);
        nlohmann::json tour = nlohmann::json::array();
        for (auto place : result.optimal_tour) {
            tour.push_back(place_label(place));
        }
        const nlohmann::json j{{"optimal_tour", tour},
                               {"optimal_length", result.optimal_length},
                               {"enumerated_count", result.enumerated_count}};
        out << j.dump(2) << "\n";
        return kExitSuccess;
    } catch (const InstanceTooLargeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

GAConfig string_demo_config(const StringDemoOptions& options) {
    GAConfig config;
    config.population_size = options.population;
    config.crossover = {CrossoverOperator::single_point, options.crossover_rate};
    config.mutation = {MutationOperator::random_reset, options.mutation_rate};
    config.elitism_count = options.elitism;
    config.seed = options.seed;
    config.termination.max_generations = options.generations;
    return config;
}

int cmd_string_demo(const StringDemoOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const TargetStringInstance problem(
            options.target,
            options.alphabet ? Alphabet(*options.alphabet) : Alphabet::printable_ascii());
        const auto config = string_demo_config(options);
        const auto log = run(config, problem, GenerationObserver<StringChromosome>(
                                                  [&](const GenerationStats<StringChromosome>& s) {
                                                      out << s.generation << " "
                                                          << format_number(s.best_fitness) << " "
                                                          << s.best_chromosome.genes << "\n";
                                                  }));
        const bool matched = *log.best.fitness == 0;
        out << (matched ? "matched" : "not matched") << " after " << log.generations()
            << " generations\n";
        return matched ? kExitSuccess : kExitUnreached;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace seedga::cli
