#include "seedga/config.hpp"

#include <set>

#include "seedga/errors.hpp"

namespace seedga {

namespace {

using nlohmann::json;

class SchemaChecker {
  public:
    std::vector<std::string> violations;

    void object(const json& j, const std::string& path, const std::set<std::string>& required,
                const std::set<std::string>& optional) {
        if (!j.is_object()) {
            violations.push_back(label(path) + " must be an object");
            return;
        }
        for (const auto& key : required) {
            if (!j.contains(key)) {
                violations.push_back(join(path, key) + " is required");
            }
        }
        for (const auto& [key, value] : j.items()) {
            if (!required.count(key) && !optional.count(key)) {
                violations.push_back(join(path, key) + " is not a recognised key");
            }
        }
    }

    template <class Predicate>
    void field(const json& parent, const std::string& path, const std::string& key,
               std::string_view expected, Predicate ok) {
        if (!parent.is_object() || !parent.contains(key)) {
            return;
        }
        if (!ok(parent.at(key))) {
            violations.push_back(join(path, key) + " must be " + std::string(expected));
        }
    }

    static std::string join(const std::string& path, const std::string& key) {
        return path.empty() ? key : path + "." + key;
    }
    static std::string label(const std::string& path) { return path.empty() ? "document" : path; }
};

bool is_count(const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0); }

} // namespace

std::vector<std::string> schema_violations(const json& document) {
    SchemaChecker s;
    s.object(document, "",
             {"problem", "instance", "population_size", "crossover", "mutation", "elitism_count",
              "seed", "termination"},
             {"alphabet"});
    if (!document.is_object()) {
        return s.violations;
    }
    s.field(document, "", "problem", "\"tsp\" or \"string\"", [](const json& v) {
        return v.is_string() && (v == "tsp" || v == "string");
    });
    s.field(document, "", "instance", "a string", [](const json& v) { return v.is_string(); });
    s.field(document, "", "alphabet", "a string", [](const json& v) { return v.is_string(); });
    s.field(document, "", "population_size", "a nonnegative integer", is_count);
    s.field(document, "", "elitism_count", "a nonnegative integer", is_count);
    s.field(document, "", "seed", "an unsigned 64-bit integer", is_count);

    for (const char* section : {"crossover", "mutation"}) {
        if (!document.contains(section)) {
            continue;
        }
        const auto& sub = document.at(section);
        s.object(sub, section, {"operator", "rate"}, {});
        s.field(sub, section, "operator", "a string", [](const json& v) { return v.is_string(); });
        s.field(sub, section, "rate", "a number", [](const json& v) { return v.is_number(); });
    }
    if (document.contains("termination")) {
        const auto& term = document.at("termination");
        s.object(term, "termination", {"max_generations"},
                 {"fitness_threshold", "stagnation_window", "wall_clock_ms"});
        s.field(term, "termination", "max_generations", "a nonnegative integer", is_count);
        s.field(term, "termination", "fitness_threshold", "a number",
                [](const json& v) { return v.is_number(); });
        s.field(term, "termination", "stagnation_window", "a nonnegative integer", is_count);
        s.field(term, "termination", "wall_clock_ms", "a nonnegative integer", is_count);
    }
    if (document.contains("alphabet") && document.value("problem", "") == "tsp") {
        s.violations.push_back("alphabet only applies to problem \"string\"");
    }
    return s.violations;
}

RunConfigDocument parse_run_config(std::string_view json_text) {
    json document;
    try {
        document = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    auto violations = schema_violations(document);
    RunConfigDocument doc;
    if (violations.empty()) {
        doc.problem = document.at("problem") == "tsp" ? ProblemKind::tsp : ProblemKind::string;
        doc.instance = document.at("instance").get<std::string>();
        if (document.contains("alphabet")) {
            doc.alphabet = document.at("alphabet").get<std::string>();
        }
        auto& ga = doc.ga;
        ga.population_size = document.at("population_size").get<std::size_t>();
        ga.elitism_count = document.at("elitism_count").get<std::size_t>();
        ga.seed = document.at("seed").get<std::uint64_t>();
        try {
            ga.crossover.op =
                parse_crossover_operator(document.at("crossover").at("operator").get<std::string>());
        } catch (const ConfigError& e) {
            violations.push_back(std::string("crossover.operator: ") + e.what());
        }
        try {
            ga.mutation.op =
                parse_mutation_operator(document.at("mutation").at("operator").get<std::string>());
        } catch (const ConfigError& e) {
            violations.push_back(std::string("mutation.operator: ") + e.what());
        }
        ga.crossover.rate = document.at("crossover").at("rate").get<double>();
        ga.mutation.rate = document.at("mutation").at("rate").get<double>();

        const auto& term = document.at("termination");
        ga.termination.max_generations = term.at("max_generations").get<std::size_t>();
        if (term.contains("fitness_threshold")) {
            ga.termination.fitness_threshold = term.at("fitness_threshold").get<double>();
        }
        if (term.contains("stagnation_window")) {
            ga.termination.stagnation_window = term.at("stagnation_window").get<std::size_t>();
        }
        if (term.contains("wall_clock_ms")) {
            ga.termination.wall_clock_budget =
                std::chrono::milliseconds(term.at("wall_clock_ms").get<std::int64_t>());
        }
        auto semantic = config_violations(ga);
        violations.insert(violations.end(), semantic.begin(), semantic.end());
    }

    if (!violations.empty()) {
        std::string message = "invalid configuration:";
        for (const auto& v : violations) {
            message += "\n  - " + v;
        }
        throw ConfigError(message);
    }
    return doc;
}

void apply_overrides(RunConfigDocument& document, const ConfigOverrides& overrides) {
    auto& ga = document.ga;
    if (overrides.seed) {
        ga.seed = *overrides.seed;
    }
    if (overrides.generations) {
        ga.termination.max_generations = *overrides.generations;
    }
    if (overrides.population) {
        ga.population_size = *overrides.population;
    }
    if (overrides.crossover_rate) {
        ga.crossover.rate = *overrides.crossover_rate;
    }
    if (overrides.mutation_rate) {
        ga.mutation.rate = *overrides.mutation_rate;
    }
    if (overrides.elitism) {
        ga.elitism_count = *overrides.elitism;
    }
}

nlohmann::json to_json(const RunConfigDocument& document) {
    const auto& ga = document.ga;
    json term{{"max_generations", ga.termination.max_generations}};
    if (ga.termination.fitness_threshold) {
        term["fitness_threshold"] = *ga.termination.fitness_threshold;
    }
    if (ga.termination.stagnation_window) {
        term["stagnation_window"] = *ga.termination.stagnation_window;
    }
    if (ga.termination.wall_clock_budget) {
        term["wall_clock_ms"] = ga.termination.wall_clock_budget->count();
    }
    json j{{"problem", document.problem == ProblemKind::tsp ? "tsp" : "string"},
           {"instance", document.instance},
           {"population_size", ga.population_size},
           {"crossover", {{"operator", std::string(to_string(ga.crossover.op))}, {"rate", ga.crossover.rate}}},
           {"mutation", {{"operator", std::string(to_string(ga.mutation.op))}, {"rate", ga.mutation.rate}}},
           {"elitism_count", ga.elitism_count},
           {"seed", ga.seed},
           {"termination", term}};
    if (document.alphabet) {
        j["alphabet"] = *document.alphabet;
    }
    return j;
}

} // namespace seedga
