#include <gtest/gtest.h>

#include <sstream>

#include "seedga/config.hpp"
#include "seedga/errors.hpp"
#include "seedga/runlog_io.hpp"
#include "seedga/worked_example.hpp"

using namespace seedga;
using nlohmann::json;

namespace {

json valid_tsp() {
    return json::parse(R"({
      "problem": "tsp", "instance": "x.csv", "population_size": 20,
      "crossover": {"operator": "pmx", "rate": 0.7},
      "mutation": {"operator": "swap", "rate": 0.1},
      "elitism_count": 2, "seed": 18446744073709551615,
      "termination": {"max_generations": 50, "stagnation_window": 10, "fitness_threshold": 3.5,
                      "wall_clock_ms": 250}
    })");
}

std::string config_error(const json& j) {
    try {
        parse_run_config(j.dump());
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(RunConfig, ParsesEveryField) {
    const auto doc = parse_run_config(valid_tsp().dump());
    EXPECT_EQ(doc.problem, ProblemKind::tsp);
    EXPECT_EQ(doc.instance, "x.csv");
    EXPECT_EQ(doc.ga.population_size, 20u);
    EXPECT_EQ(doc.ga.crossover, (CrossoverSpec{CrossoverOperator::pmx, 0.7}));
    EXPECT_EQ(doc.ga.mutation, (MutationSpec{MutationOperator::swap, 0.1}));
    EXPECT_EQ(doc.ga.elitism_count, 2u);
    EXPECT_EQ(doc.ga.seed, 18446744073709551615ULL);
    EXPECT_EQ(doc.ga.termination.max_generations, 50u);
    EXPECT_EQ(doc.ga.termination.stagnation_window, 10u);
    EXPECT_EQ(doc.ga.termination.fitness_threshold, 3.5);
    EXPECT_EQ(doc.ga.termination.wall_clock_budget, std::chrono::milliseconds(250));
}

TEST(RunConfig, EchoParsesBack) {
    const auto doc = parse_run_config(valid_tsp().dump());
    const auto again = parse_run_config(to_json(doc).dump());
    EXPECT_EQ(again.ga, doc.ga);
    EXPECT_EQ(again.instance, doc.instance);

    auto text = valid_tsp();
    text["problem"] = "string";
    text["instance"] = "GA";
    text["alphabet"] = "AG";
    text["crossover"]["operator"] = "single-point";
    text["mutation"]["operator"] = "random-reset";
    const auto s = parse_run_config(text.dump());
    EXPECT_EQ(parse_run_config(to_json(s).dump()).alphabet, "AG");
}

TEST(RunConfig, RateOutOfRangeNamesField) {
    auto j = valid_tsp();
    j["crossover"]["rate"] = 1.5;
    EXPECT_NE(config_error(j).find("crossover.rate"), std::string::npos);
}

TEST(RunConfig, UnknownAndMissingKeys) {
    auto j = valid_tsp();
    j["colour"] = "blue";
    j["termination"]["patience"] = 3;
    j.erase("seed");
    const auto message = config_error(j);
    EXPECT_NE(message.find("colour is not a recognised key"), std::string::npos);
    EXPECT_NE(message.find("termination.patience is not a recognised key"), std::string::npos);
    EXPECT_NE(message.find("seed is required"), std::string::npos);
}

TEST(RunConfig, TypeErrors) {
    auto j = valid_tsp();
    j["population_size"] = -3;
    j["mutation"]["rate"] = "high";
    j["problem"] = "knapsack";
    const auto message = config_error(j);
    EXPECT_NE(message.find("population_size must be a nonnegative integer"), std::string::npos);
    EXPECT_NE(message.find("mutation.rate must be a number"), std::string::npos);
    EXPECT_NE(message.find("problem must be"), std::string::npos);
}

TEST(RunConfig, BadOperatorAndAlphabetOnTsp) {
    auto j = valid_tsp();
    j["crossover"]["operator"] = "cycle";
    EXPECT_NE(config_error(j).find("crossover.operator"), std::string::npos);
    j = valid_tsp();
    j["alphabet"] = "abc";
    EXPECT_NE(config_error(j).find("alphabet only applies"), std::string::npos);
}

TEST(RunConfig, MalformedJson) {
    EXPECT_THROW(parse_run_config("{\"problem\": "), ConfigError);
    EXPECT_THROW(parse_run_config("[]"), ConfigError);
}

TEST(RunConfig, Overrides) {
    auto doc = parse_run_config(valid_tsp().dump());
    ConfigOverrides o;
    o.seed = 7;
    o.generations = 9;
    o.population = 12;
    o.crossover_rate = 0.5;
    o.mutation_rate = 0.25;
    o.elitism = 0;
    apply_overrides(doc, o);
    EXPECT_EQ(doc.ga.seed, 7u);
    EXPECT_EQ(doc.ga.termination.max_generations, 9u);
    EXPECT_EQ(doc.ga.population_size, 12u);
    EXPECT_EQ(doc.ga.crossover.rate, 0.5);
    EXPECT_EQ(doc.ga.mutation.rate, 0.25);
    EXPECT_EQ(doc.ga.elitism_count, 0u);
}

TEST(CsvField, QuotesOnlyWhenNeeded) {
    EXPECT_EQ(csv_field("P1-P2-P1"), "P1-P2-P1");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field(" x"), "\" x\"");
    EXPECT_EQ(split_csv_record("1,\"a,\"\"b\",c"), (std::vector<std::string>{"1", "a,\"b", "c"}));
    EXPECT_THROW(split_csv_record("\"open"), ParseError);
}

TEST(GenerationCsv, TspRoundTrip) {
    GAConfig config;
    config.population_size = 10;
    config.termination.max_generations = 40;
    const auto log = run(config, worked_example::travel_instance());
    const auto text = generation_csv<TspInstance>(log);
    EXPECT_EQ(text.substr(0, text.find('\n')), kGenerationCsvHeader);
    std::istringstream in(text);
    EXPECT_EQ(parse_generation_stats<PermutationChromosome>(in), log.history);
}

TEST(GenerationCsv, StringRoundTripWithAwkwardCharacters) {
    GAConfig config;
    config.population_size = 30;
    config.crossover = {CrossoverOperator::single_point, 0.9};
    config.mutation = {MutationOperator::random_reset, 0.9};
    config.termination.max_generations = 60;
    const TargetStringInstance instance("a,\"b\" c", Alphabet(" ,\"abc"));
    const auto log = run(config, instance);
    std::istringstream in(generation_csv<TargetStringInstance>(log));
    EXPECT_EQ(parse_generation_stats<StringChromosome>(in), log.history);
}

TEST(GenerationCsv, RejectsWrongHeader) {
    std::istringstream in("gen,best\n0,1\n");
    EXPECT_THROW(parse_generation_csv(in), ParseError);
}

TEST(RunSummary, Fields) {
    auto doc = parse_run_config(valid_tsp().dump());
    doc.ga.termination = TerminationSpec{};
    doc.ga.termination.max_generations = 5;
    const auto log = run(doc.ga, worked_example::travel_instance());
    const auto j = run_summary<TspInstance>(doc, log);
    EXPECT_EQ(j.at("termination_reason"), "max_generations");
    EXPECT_EQ(j.at("generations"), 5);
    EXPECT_EQ(j.at("evaluations"), 20 * 6);
    EXPECT_EQ(j.at("best").at("fitness").get<double>(), *log.best.fitness);
    EXPECT_EQ(j.at("config").at("crossover").at("operator"), "pmx");
}
