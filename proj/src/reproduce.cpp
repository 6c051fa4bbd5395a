#include "seedga/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "seedga/operators.hpp"
#include "seedga/worked_example.hpp"

namespace seedga {

namespace we = worked_example;

namespace {

CellCheck cell(std::string table, std::string name, double expected, double computed,
               double tolerance) {
    return {std::move(table), std::move(name), expected, computed, tolerance,
            std::abs(expected - computed) <= tolerance};
}

std::string row(std::size_t i) { return "row " + std::to_string(i + 1); }

std::vector<double> fitness_of(const TspInstance& instance,
                               const std::vector<PermutationChromosome>& chromosomes) {
    std::vector<double> f;
    for (const auto& c : chromosomes) {
        f.push_back(tsp_fitness(instance, c));
    }
    return f;
}

std::string join_indices(const std::vector<std::size_t>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(xs[i]);
    }
    return s + "]";
}

} // namespace

bool ReproductionReport::passed() const noexcept {
    return std::all_of(cells.begin(), cells.end(), [](const CellCheck& c) { return c.pass; });
}

ProbabilityColumns probability_columns(std::span<const double> values, double total) {
    ProbabilityColumns columns;
    double running = 0;
    for (double v : values) {
        columns.probabilities.push_back(v / total);
        running += columns.probabilities.back();
        columns.cumulative.push_back(running);
    }
    if (!columns.cumulative.empty()) {
        columns.cumulative.back() = 1.0;
    }
    return columns;
}

std::vector<CellCheck> check_distances() {
    std::istringstream csv(we::travel_edges_csv());
    const auto loaded = load_distance_edges(csv);
    std::vector<CellCheck> cells;
    for (const auto& e : we::travel_edges()) {
        cells.push_back(cell("distance", place_label(e.from) + "-" + place_label(e.to), e.distance,
                             loaded(e.from, e.to), 0.0));
    }
    return cells;
}

std::vector<CellCheck> check_initial_fitness() {
    const auto computed = fitness_of(we::travel_instance(), we::initial_chromosomes());
    const auto expected = we::initial_fitness();
    std::vector<CellCheck> cells;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        cells.push_back(cell("tour-fitness", row(i), expected[i], computed[i], 0.0));
    }
    return cells;
}

std::vector<CellCheck> check_selection() {
    const auto fitness = fitness_of(we::travel_instance(), we::initial_chromosomes());
    const auto wheel = build_wheel(fitness);
    std::vector<CellCheck> cells;

    const auto values = we::selection_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        cells.push_back(cell("selection-value", row(i), values[i], wheel.values[i], kPrintedTolerance));
    }
    cells.push_back(cell("selection-value", "total", we::kSelectionTotal, wheel.total, kPrintedTolerance));

    // The printed probability column divides the printed six-decimal values
    // by the printed total, so it is recomputed from those inputs.
    const auto columns = probability_columns(values, we::kSelectionTotal);
    const auto probabilities = we::selection_probabilities();
    const auto cumulative = we::cumulative_probabilities();
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cells.push_back(cell("selection-probability", row(i), probabilities[i],
                             columns.probabilities[i], kPrintedTolerance));
    }
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        cells.push_back(cell("cumulative-probability", row(i), cumulative[i], columns.cumulative[i],
                             kPrintedTolerance));
    }
    cells.push_back(cell("wheel-closure", "exact wheel final cumulative", 1.0, wheel.cumulative.back(),
                         kClosureTolerance));
    return cells;
}

std::vector<CellCheck> check_mutated_fitness() {
    const auto computed = fitness_of(we::travel_instance(), we::mutated_routes());
    const auto expected = we::mutated_fitness();
    std::vector<CellCheck> cells;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        cells.push_back(cell("mutated-tour-fitness", row(i), expected[i], computed[i], 0.0));
    }
    return cells;
}

ReproductionReport reproduce_worked_example() {
    ReproductionReport report;
    for (auto part : {check_distances(), check_initial_fitness(), check_selection(),
                      check_mutated_fitness()}) {
        report.cells.insert(report.cells.end(), part.begin(), part.end());
    }

    const auto instance = we::travel_instance();
    const auto wheel = build_wheel(fitness_of(instance, we::initial_chromosomes()));

    double max_p = 0;
    double max_c = 0;
    const auto printed_p = we::selection_probabilities();
    const auto printed_c = we::cumulative_probabilities();
    for (std::size_t i = 0; i < wheel.size(); ++i) {
        max_p = std::max(max_p, std::abs(wheel.probabilities[i] - printed_p[i]));
        max_c = std::max(max_c, std::abs(wheel.cumulative[i] - printed_c[i]));
    }
    report.notes.push_back(
        "exact double-precision wheel differs from the printed probability column by up to " +
        format_number(max_p) + " and from the cumulative column by up to " + format_number(max_c) +
        "; the printed columns were derived from six-decimal rounded values");

    std::vector<std::size_t> spun;
    const auto columns = probability_columns(we::selection_values(), we::kSelectionTotal);
    for (double r : we::selection_draws()) {
        spun.push_back(static_cast<std::size_t>(
                           std::upper_bound(columns.cumulative.begin(), columns.cumulative.end(), r) -
                           columns.cumulative.begin()) +
                       1);
    }
    report.not_checked.push_back(
        "selection-mapping: known-inconsistent, not checked; spinning the printed draws against the "
        "printed cumulative column selects " +
        join_indices(spun) + " but the printed old->new mapping is " +
        join_indices(we::selection_mapping()));
    report.not_checked.push_back(
        "mutated-chromosomes: known-inconsistent, not checked; the post-mutation chromosomes are "
        "identical to the pre-mutation ones, and the routes printed with the post-mutation fitness "
        "values are different chromosomes again");

    report.claims = adjudicate_claims(instance, we::route_claims());
    return report;
}

std::string render_text(const ReproductionReport& report) {
    std::ostringstream out;
    out << std::setprecision(10);
    std::string current;
    for (const auto& c : report.cells) {
        if (c.table != current) {
            current = c.table;
            out << current << "\n";
        }
        out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(30) << c.cell
            << " expected " << std::setw(12) << c.expected << " computed " << std::setw(14)
            << c.computed << " tol " << c.tolerance << "\n";
    }
    for (const auto& s : report.not_checked) {
        out << "NOT CHECKED  " << s << "\n";
    }
    for (const auto& s : report.notes) {
        out << "NOTE  " << s << "\n";
    }

    const auto& claims = report.claims;
    out << "route claims (optimum " << format_number(claims.oracle.optimal_length) << " via "
        << format_tour(claims.oracle.optimal_tour) << ", " << claims.oracle.enumerated_count
        << " tours enumerated; Held-Karp " << format_number(claims.held_karp_length)
        << (claims.oracles_agree() ? ", agrees" : ", DISAGREES") << ")\n";
    for (const auto& f : claims.findings) {
        out << "  " << (f.consistent ? "ok     " : "FLAGGED") << "  " << f.label << ": " << f.tour
            << " length " << format_number(f.computed_length);
        if (!f.note.empty()) {
            out << " (" << f.note << ")";
        }
        out << "\n";
    }
    const auto failed = std::count_if(report.cells.begin(), report.cells.end(),
                                      [](const CellCheck& c) { return !c.pass; });
    out << (report.passed() ? "all " : "") << report.cells.size() - static_cast<std::size_t>(failed)
        << "/" << report.cells.size() << " cells reproduced\n";
    return out.str();
}

nlohmann::json to_json(const ReproductionReport& report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : report.cells) {
        cells.push_back({{"table", c.table},
                         {"cell", c.cell},
                         {"expected", c.expected},
                         {"computed", c.computed},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}});
    }
    nlohmann::json findings = nlohmann::json::array();
    for (const auto& f : report.claims.findings) {
        nlohmann::json j{{"label", f.label},
                         {"tour", f.tour},
                         {"computed_length", f.computed_length},
                         {"claimed_optimal", f.claimed_optimal},
                         {"gap_to_optimum", f.gap_to_optimum},
                         {"consistent", f.consistent}};
        if (f.stated_length) {
            j["stated_length"] = *f.stated_length;
        }
        if (!f.note.empty()) {
            j["note"] = f.note;
        }
        findings.push_back(std::move(j));
    }
    return {{"cells", cells},
            {"not_checked", report.not_checked},
            {"notes", report.notes},
            {"claims",
             {{"optimal_length", report.claims.oracle.optimal_length},
              {"optimal_tour", format_tour(report.claims.oracle.optimal_tour)},
              {"enumerated_count", report.claims.oracle.enumerated_count},
              {"held_karp_length", report.claims.held_karp_length},
              {"findings", findings}}},
            {"passed", report.passed()}};
}

} // namespace seedga
