// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "seedga/cli.hpp"
#include "seedga/engine.hpp"
#include "seedga/operators.hpp"
#include "seedga/oracle.hpp"
#include "seedga/reproduce.hpp"
#include "seedga/worked_example.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace seedga;
namespace wx = seedga::worked_example;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Best-fitness histories collected from every GA run, checked by criterion 6.
std::vector<std::vector<double>> g_histories;

void record(const auto& log) {
    std::vector<double> h;
    for (const auto& s : log.history) h.push_back(s.best_fitness);
    g_histories.push_back(std::move(h));
}

Verdict tour_fitnesses() {
    Verdict v;
    const auto instance = wx::travel_instance();
    const auto chromosomes = wx::initial_chromosomes();
    const auto t0 = Clock::now();
    std::vector<double> got;
    for (const auto& c : chromosomes) got.push_back(tsp_fitness(instance, c));
    const double ms = ms_since(t0);
    v.require(got == std::vector<double>{29, 22, 29, 35, 30, 34, 34, 29}, "fitness mismatch");
    v.require(ms < 1.0, "took " + fmt(ms) + " ms");
    v.detail = v.pass ? "[29,22,29,35,30,34,34,29] in " + fmt(ms) + " ms" : v.detail;
    return v;
}

Verdict wheel_columns() {
    Verdict v;
    const auto fitness = wx::initial_fitness();
    const auto values = wx::selection_values();
    const auto probs = wx::selection_probabilities();
    const auto cum = wx::cumulative_probabilities();

    const auto t0 = Clock::now();
    const auto wheel = build_wheel(fitness);
    const auto printed = probability_columns(values, wx::kSelectionTotal);
    const double ms = ms_since(t0);

    double worst_value = 0, worst_prob = 0, worst_cum = 0, exact_drift = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        worst_value = std::max(worst_value, std::abs(wheel.values[i] - values[i]));
        worst_prob = std::max(worst_prob, std::abs(printed.probabilities[i] - probs[i]));
        worst_cum = std::max(worst_cum, std::abs(printed.cumulative[i] - cum[i]));
        exact_drift = std::max({exact_drift, std::abs(wheel.probabilities[i] - probs[i]),
                                std::abs(wheel.cumulative[i] - cum[i])});
    }
    v.require(worst_value <= kPrintedTolerance, "value off by " + fmt(worst_value));
    v.require(std::abs(wheel.total - wx::kSelectionTotal) <= kPrintedTolerance, "total off");
    v.require(worst_prob <= kPrintedTolerance, "probability off by " + fmt(worst_prob));
    v.require(worst_cum <= kPrintedTolerance, "cumulative off by " + fmt(worst_cum));
    v.require(std::abs(printed.cumulative.back() - 1.0) <= kClosureTolerance, "cumulative not closed");
    v.require(std::abs(wheel.cumulative.back() - 1.0) <= kClosureTolerance, "exact wheel not closed");
    v.require(ms < 1.0, "took " + fmt(ms) + " ms");
    if (v.pass) {
        v.detail = "max |diff| value " + fmt(worst_value) + ", probability " + fmt(worst_prob) +
                   ", cumulative " + fmt(worst_cum) + " in " + fmt(ms) + " ms";
    }
    std::cout << "NOTE  probabilities from unrounded values drift up to " << fmt(exact_drift)
              << " from the printed columns; the printed columns are reproduced from the printed values\n";
    return v;
}

Verdict mutated_routes() {
    Verdict v;
    const auto instance = wx::travel_instance();
    const auto routes = wx::mutated_routes();
    const auto t0 = Clock::now();
    std::vector<double> got;
    for (const auto& c : routes) got.push_back(tsp_fitness(instance, c));
    const double ms = ms_since(t0);
    v.require(got == std::vector<double>{30, 31, 29, 30, 33, 35, 23, 27}, "fitness mismatch");
    v.require(ms < 1.0, "took " + fmt(ms) + " ms");
    v.detail = v.pass ? "[30,31,29,30,33,35,23,27] in " + fmt(ms) + " ms" : v.detail;
    return v;
}

Verdict oracle_adjudication() {
    Verdict v;
    const auto instance = wx::travel_instance();
    const auto t0 = Clock::now();
    const auto oracle = brute_force_tsp(instance);
    const double ms = ms_since(t0);
    const auto claims = wx::route_claims();
    const auto report = adjudicate_claims(instance, claims);

    v.require(oracle.enumerated_count == 120, "enumerated " + std::to_string(oracle.enumerated_count));
    v.require(ms < 100.0, "took " + fmt(ms) + " ms");
    v.require(oracle.optimal_length <= 22, "optimum " + fmt(oracle.optimal_length));
    v.require(report.oracles_agree(), "Held-Karp disagrees");
    const double claimed = tsp_fitness(instance, wx::claimed_optimal_route());
    v.require(claimed == 33, "claimed route evaluates to " + fmt(claimed));
    const auto flagged = std::find_if(report.findings.begin(), report.findings.end(), [](const auto& f) {
        return f.claimed_optimal && !f.consistent;
    });
    v.require(flagged != report.findings.end(), "claimed route not flagged");
    if (v.pass) {
        v.detail = "120 tours in " + fmt(ms) + " ms, optimum " + fmt(oracle.optimal_length) + " via " +
                   format_tour(oracle.optimal_tour) + ", claimed route 33 flagged (gap " +
                   fmt(flagged->gap_to_optimum) + "), Held-Karp agrees";
    }
    return v;
}

Verdict ga_vs_oracle() {
    Verdict v;
    GAConfig config;
    config.population_size = 50;
    config.crossover = {CrossoverOperator::ox1, 0.9};
    config.mutation = {MutationOperator::swap, 0.2};
    config.elitism_count = 1;
    config.termination.max_generations = 200;

    Rng rng(20240917);
    const std::size_t sizes[] = {4, 5, 6};
    std::size_t runs = 0, above_or_equal = 0, optimal = 0;
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k < 20; ++k) {
        const auto instance = testkit::random_instance(sizes[k % 3], rng);
        const double optimum = brute_force_tsp(instance).optimal_length;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            config.seed = seed;
            const auto log = run(config, instance);
            record(log);
            ++runs;
            above_or_equal += *log.best.fitness >= optimum;
            optimal += *log.best.fitness == optimum;
        }
    }
    const double ms = ms_since(t0);
    v.require(above_or_equal == runs, std::to_string(runs - above_or_equal) + " runs beat the oracle");
    v.require(optimal * 100 >= runs * 80, "optimum hit in " + std::to_string(optimal) + "/" + std::to_string(runs));
    v.require(ms < 10000.0, "took " + fmt(ms) + " ms");
    if (v.pass) {
        v.detail = std::to_string(above_or_equal) + "/" + std::to_string(runs) + " >= optimum, " +
                   std::to_string(optimal) + "/" + std::to_string(runs) + " optimal in " + fmt(ms) + " ms";
    }
    return v;
}

Verdict permutation_safety() {
    Verdict v;
    Rng rng(7);
    std::size_t violations = 0;
    constexpr std::size_t kIterations = 10000;
    for (std::size_t it = 0; it < kIterations; ++it) {
        const std::size_t n = 2 + rng.below(11);
        const auto a = random_permutation(n, rng);
        const auto b = random_permutation(n, rng);
        const std::size_t len = n - 1;
        std::size_t c1 = rng.below(len + 1), c2 = rng.below(len + 1);
        if (c1 > c2) std::swap(c1, c2);
        const auto ox = order_crossover(a, b, c1, c2);
        const auto pm = pmx_crossover(a, b, c1, c2);
        const auto sw = swap_mutation(a, rng.below(len), rng.below(len));
        for (const auto* c : {&ox.first, &ox.second, &pm.first, &pm.second, &sw}) {
            violations += !validate_permutation(*c, n).valid();
        }
    }
    v.require(violations == 0, std::to_string(violations) + " invalid children");
    if (v.pass) v.detail = std::to_string(kIterations) + " iterations x (OX1, PMX, swap), 0 violations";
    return v;
}

Verdict selection_fidelity() {
    Verdict v;
    const auto printed = probability_columns(wx::selection_values(), wx::kSelectionTotal);
    SelectionWheel wheel;
    wheel.values = wx::selection_values();
    wheel.total = wx::kSelectionTotal;
    wheel.probabilities = printed.probabilities;
    wheel.cumulative = printed.cumulative;
    const auto target = wx::selection_probabilities();

    Rng rng(99);
    constexpr std::size_t kSpins = 100000;
    std::vector<std::size_t> hits(wheel.size(), 0);
    const auto t0 = Clock::now();
    for (std::size_t i = 0; i < kSpins; ++i) ++hits[spin(wheel, rng.unit())];
    const double ms = ms_since(t0);
    double worst = 0;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        worst = std::max(worst, std::abs(static_cast<double>(hits[i]) / kSpins - target[i]));
    }
    v.require(worst <= 0.01, "frequency off by " + fmt(worst));
    v.require(ms < 1000.0, "took " + fmt(ms) + " ms");
    if (v.pass) v.detail = "100000 spins, max |freq - p| " + fmt(worst) + " in " + fmt(ms) + " ms";
    return v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict determinism() {
    Verdict v;
    const fs::path root = fs::temp_directory_path() / ("seedga_acceptance_" + std::to_string(::getpid()));
    const std::string cli = SEEDGA_CLI_PATH;
    const std::string config = std::string(SEEDGA_DATA_DIR) + "/tsp_example.json";
    for (const char* leg : {"a", "b"}) {
        const auto cmd = cli + " run " + config + " --seed 11 --out-dir " + (root / leg).string() + " >/dev/null";
        const int status = std::system(cmd.c_str());
        v.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, std::string("run ") + leg + " failed");
    }
    for (const char* ext : {".csv", ".json"}) {
        const auto a = slurp(root / "a" / (std::string("run_11") + ext));
        const auto b = slurp(root / "b" / (std::string("run_11") + ext));
        v.require(!a.empty() && a == b, std::string(ext) + " outputs differ");
    }
    fs::remove_all(root);
    if (v.pass) v.detail = "two binary invocations, byte-identical CSV and JSON";
    return v;
}

// Pinned: every seed 1..20 matches this target well inside the budget.
constexpr std::uint64_t kStringDemoSeed = 1;

Verdict string_demo() {
    Verdict v;
    const TargetStringInstance instance("Hello, World", Alphabet::printable_ascii());
    cli::StringDemoOptions options;
    options.target = "Hello, World";
    options.seed = kStringDemoSeed;
    const auto config = cli::string_demo_config(options);
    v.require(config.population_size == 200 && config.termination.max_generations == 2000,
              "demo defaults changed");
    const auto log = run(config, instance);
    record(log);
    v.require(*log.best.fitness == 0, "best fitness " + fmt(*log.best.fitness));
    v.require(string_fitness(instance, StringChromosome{"Hello, World"}) == 0, "identical string not 0");
    v.require(string_fitness(instance, StringChromosome{"Hello, Worle"}) == 1, "single mismatch not 1");
    if (v.pass) {
        v.detail = "seed " + std::to_string(kStringDemoSeed) + " matched after " +
                   std::to_string(log.generations()) + " generations; identical 0, one mismatch 1";
    }
    return v;
}

Verdict elitism_monotonicity() {
    Verdict v;
    std::size_t violations = 0, generations = 0;
    for (const auto& h : g_histories) {
        generations += h.size();
        for (std::size_t i = 1; i < h.size(); ++i) violations += h[i] > h[i - 1];
    }
    v.require(!g_histories.empty(), "no runs recorded");
    v.require(violations == 0, std::to_string(violations) + " increases");
    if (v.pass) {
        v.detail = std::to_string(g_histories.size()) + " runs, " + std::to_string(generations) +
                   " generations, 0 increases";
    }
    return v;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> check;
    };
    // Monotonicity runs last so it sees every recorded history.
    const std::vector<Criterion> criteria = {
        {1, "initial tour fitnesses", tour_fitnesses},
        {2, "selection wheel columns", wheel_columns},
        {3, "post-mutation route fitnesses", mutated_routes},
        {4, "oracle adjudication", oracle_adjudication},
        {5, "GA versus oracle", ga_vs_oracle},
        {7, "permutation safety", permutation_safety},
        {8, "selection fidelity", selection_fidelity},
        {9, "determinism", determinism},
        {10, "string demo", string_demo},
        {6, "elitism monotonicity", elitism_monotonicity},
    };
    std::vector<std::pair<int, std::string>> lines;
    bool all = true;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("threw: ") + e.what();
        }
        all = all && v.pass;
        lines.emplace_back(c.id, std::string(v.pass ? "PASS" : "FAIL") + "  [" + std::to_string(c.id) + "] " +
                                     c.name + ": " + v.detail);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [id, line] : lines) std::cout << line << "\n";
    return all ? 0 : 1;
}
