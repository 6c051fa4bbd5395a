#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "seedga/cli.hpp"

int main(int argc, char** argv) {
    using namespace seedga::cli;

    CLI::App app{"seedga: deterministic genetic algorithm for small TSP and target-string problems"};
    app.require_subcommand(1);

    RunOptions run_options;
    std::uint64_t seed = 0;
    std::size_t generations = 0;
    std::size_t population = 0;
    double crossover_rate = 0;
    double mutation_rate = 0;
    std::size_t elitism = 0;

    auto* run = app.add_subcommand("run", "Run a GA experiment from a JSON config");
    run->add_option("config", run_options.config_path, "Run configuration (JSON)")->required();
    auto* seed_opt = run->add_option("--seed", seed, "Override the seed");
    auto* gen_opt = run->add_option("--generations", generations, "Override max_generations");
    auto* pop_opt = run->add_option("--population", population, "Override population_size");
    auto* cx_opt = run->add_option("--crossover-rate", crossover_rate, "Override crossover rate");
    auto* mut_opt = run->add_option("--mutation-rate", mutation_rate, "Override mutation rate");
    auto* elite_opt = run->add_option("--elitism", elitism, "Override elitism_count");
    run->add_option("--out-dir", run_options.out_dir, "Directory for CSV and JSON outputs");
    run->add_option("--runs", run_options.runs, "Run this many consecutive seeds concurrently");

    bool reproduce_json = false;
    auto* reproduce = app.add_subcommand("reproduce", "Recompute the six-place worked example");
    reproduce->add_flag("--json", reproduce_json, "Emit the report as JSON");

    std::string matrix_path;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum of a small TSP instance");
    oracle->add_option("matrix", matrix_path, "Edge list CSV (From,To,Distance)")->required();

    StringDemoOptions demo;
    std::string alphabet;
    auto* string_demo = app.add_subcommand("string-demo", "Evolve a random string into a target");
    string_demo->add_option("target", demo.target, "Target string")->required();
    auto* alphabet_opt = string_demo->add_option("--alphabet", alphabet, "Gene characters");
    string_demo->add_option("--seed", demo.seed, "Seed")->capture_default_str();
    string_demo->add_option("--population", demo.population, "Population size")->capture_default_str();
    string_demo->add_option("--generations", demo.generations, "Max generations")->capture_default_str();
    string_demo->add_option("--crossover-rate", demo.crossover_rate, "Crossover rate")->capture_default_str();
    string_demo->add_option("--mutation-rate", demo.mutation_rate, "Mutation rate")->capture_default_str();
    string_demo->add_option("--elitism", demo.elitism, "Elite count")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (*run) {
        auto& o = run_options.overrides;
        if (*seed_opt) o.seed = seed;
        if (*gen_opt) o.generations = generations;
        if (*pop_opt) o.population = population;
        if (*cx_opt) o.crossover_rate = crossover_rate;
        if (*mut_opt) o.mutation_rate = mutation_rate;
        if (*elite_opt) o.elitism = elitism;
        return cmd_run(run_options, std::cout, std::cerr);
    }
    if (*reproduce) {
        return cmd_reproduce(reproduce_json, std::cout, std::cerr);
    }
    if (*oracle) {
        return cmd_oracle(matrix_path, std::cout, std::cerr);
    }
    if (*alphabet_opt) {
        demo.alphabet = alphabet;
    }
    return cmd_string_demo(demo, std::cout, std::cerr);
}
