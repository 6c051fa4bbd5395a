#include "seedga/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "seedga/errors.hpp"

namespace seedga {

OracleResult brute_force_tsp(const TspInstance& instance) {
    const std::size_t n = instance.place_count();
    if (n > kMaxOraclePlaces) {
        throw InstanceTooLargeError("exhaustive search is limited to " +
                                    std::to_string(kMaxOraclePlaces) + " places, instance has " +
                                    std::to_string(n));
    }
    const auto& d = instance.matrix();

    std::vector<PlaceId> genes;
    for (std::size_t p = 1; p < n; ++p) {
        genes.push_back(PlaceId{p});
    }

    OracleResult result;
    result.optimal_length = std::numeric_limits<double>::infinity();
    do {
        double length = 0;
        PlaceId previous = kHome;
        for (auto g : genes) {
            length += d(previous, g);
            previous = g;
        }
        length += d(previous, kHome);
        ++result.enumerated_count;
        if (length < result.optimal_length) {
            result.optimal_length = length;
            result.optimal_chromosome.genes = genes;
        }
    } while (std::next_permutation(genes.begin(), genes.end()));

    result.optimal_tour = tour_of(result.optimal_chromosome);
    return result;
}

double held_karp_tsp(const TspInstance& instance) {
    const std::size_t n = instance.place_count();
    if (n > kMaxHeldKarpPlaces) {
        throw InstanceTooLargeError("Held-Karp is limited to " + std::to_string(kMaxHeldKarpPlaces) +
                                    " places, instance has " + std::to_string(n));
    }
    const auto& d = instance.matrix();
    // Bit k stands for place k + 1.
    const std::size_t m = n - 1;
    const std::size_t subsets = std::size_t{1} << m;
    const double inf = std::numeric_limits<double>::infinity();

    // best[mask * m + k]: shortest home -> ... -> place k+1 path visiting exactly mask.
    std::vector<double> best(subsets * m, inf);
    for (std::size_t k = 0; k < m; ++k) {
        best[(std::size_t{1} << k) * m + k] = d(0, k + 1);
    }
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        for (std::size_t last = 0; last < m; ++last) {
            const double base = best[mask * m + last];
            if (!(mask & (std::size_t{1} << last)) || base == inf) {
                continue;
            }
            for (std::size_t next = 0; next < m; ++next) {
                if (mask & (std::size_t{1} << next)) {
                    continue;
                }
                const std::size_t grown = mask | (std::size_t{1} << next);
                best[grown * m + next] = std::min(best[grown * m + next], base + d(last + 1, next + 1));
            }
        }
    }
    double length = inf;
    for (std::size_t last = 0; last < m; ++last) {
        length = std::min(length, best[(subsets - 1) * m + last] + d(last + 1, 0));
    }
    return length;
}

bool ClaimReport::all_consistent() const noexcept {
    return std::all_of(findings.begin(), findings.end(),
                       [](const ClaimFinding& f) { return f.consistent; });
}

ClaimReport adjudicate_claims(const TspInstance& instance, std::span<const RouteClaim> claims) {
    ClaimReport report;
    report.oracle = brute_force_tsp(instance);
    report.held_karp_length = held_karp_tsp(instance);

    for (const auto& claim : claims) {
        ClaimFinding finding;
        finding.label = claim.label;
        finding.tour = format_chromosome_tour(claim.chromosome);
        finding.computed_length = tsp_fitness(instance, claim.chromosome);
        finding.stated_length = claim.stated_length;
        finding.claimed_optimal = claim.claimed_optimal;
        finding.gap_to_optimum = finding.computed_length - report.oracle.optimal_length;

        if (claim.stated_length && *claim.stated_length != finding.computed_length) {
            finding.consistent = false;
            finding.note = "stated length " + format_number(*claim.stated_length) +
                           " but the distances give " + format_number(finding.computed_length);
        }
        if (claim.claimed_optimal && finding.gap_to_optimum > 0) {
            finding.consistent = false;
            if (!finding.note.empty()) {
                finding.note += "; ";
            }
            finding.note += "claimed optimal but " + format_number(finding.gap_to_optimum) +
                            " longer than the optimum " +
                            format_number(report.oracle.optimal_length) + " (" +
                            format_tour(report.oracle.optimal_tour) + ")";
        }
        report.findings.push_back(std::move(finding));
    }
    return report;
}

} // namespace seedga
