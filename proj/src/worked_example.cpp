#include "seedga/worked_example.hpp"

namespace seedga::worked_example {

namespace {

using C = PermutationChromosome;

DistanceEdge edge(std::size_t from, std::size_t to, double distance) {
    return {PlaceId{from - 1}, PlaceId{to - 1}, distance};
}

} // namespace

std::vector<DistanceEdge> travel_edges() {
    return {edge(1, 2, 5), edge(1, 3, 3), edge(1, 4, 4), edge(1, 5, 6), edge(1, 6, 2),
            edge(2, 3, 7), edge(2, 4, 4), edge(2, 5, 3), edge(2, 6, 5), edge(3, 4, 9),
            edge(3, 5, 8), edge(3, 6, 8), edge(4, 5, 4), edge(4, 6, 3), edge(5, 6, 6)};
}

std::string travel_edges_csv() {
    return "S. No.,From,To,Distance\n"
           "1,P1,P2,5\n"
           "2,P1,P3,3\n"
           "3,P1,P4,4\n"
           "45,P1,P5,6\n"
           "6,P1,P6,2\n"
           "7,P2,P3,7\n"
           "8,P2,P4,4\n"
           "9,P2,P5,3\n"
           "10,P2,P6,5\n"
           "11,P3,P4,9\n"
           "12,P3,P5,8\n"
           "13,P3,P6,8\n"
           "14,P4,P5,4\n"
           "15,P4,P6,3\n"
           "16,P5,P6,6\n";
}

TspInstance travel_instance() { return TspInstance(matrix_from_edges(travel_edges())); }

std::vector<PermutationChromosome> initial_chromosomes() {
    return {C::from_numbers({2, 3, 5, 4, 6}), C::from_numbers({3, 2, 5, 4, 6}),
            C::from_numbers({3, 4, 6, 5, 2}), C::from_numbers({4, 3, 6, 5, 2}),
            C::from_numbers({5, 2, 3, 4, 6}), C::from_numbers({5, 3, 6, 4, 2}),
            C::from_numbers({6, 5, 3, 4, 2}), C::from_numbers({6, 4, 5, 3, 2})};
}

std::vector<double> initial_fitness() { return {29, 22, 29, 35, 30, 34, 34, 29}; }

std::vector<double> selection_values() {
    return {0.034483, 0.045455, 0.034483, 0.028571, 0.033333, 0.029412, 0.029412, 0.034483};
}

std::vector<double> selection_probabilities() {
    return {0.127889597, 0.168582248, 0.127889597, 0.105963335,
            0.123624509, 0.109082413, 0.109082413, 0.127889597};
}

std::vector<double> cumulative_probabilities() {
    return {0.127889597, 0.296471845, 0.424361442, 0.530324777,
            0.653949286, 0.763031699, 0.872114112, 1.000000000};
}

std::vector<double> selection_draws() {
    return {0.24473, 0.34523, 0.65741, 0.11766, 0.23123, 0.54621, 0.56312, 0.44344};
}

std::vector<double> crossover_draws() {
    return {0.76588, 0.37643, 0.98345, 0.65876, 0.21543, 0.23765, 0.18745, 0.64398};
}

std::vector<std::size_t> selection_mapping() { return {4, 1, 7, 8, 5, 6, 2, 3}; }

std::vector<PermutationChromosome> selected_chromosomes() {
    return {C::from_numbers({4, 3, 6, 5, 2}), C::from_numbers({2, 3, 5, 4, 6}),
            C::from_numbers({6, 5, 3, 4, 2}), C::from_numbers({6, 4, 5, 3, 2}),
            C::from_numbers({5, 2, 3, 4, 6}), C::from_numbers({5, 3, 6, 4, 2}),
            C::from_numbers({3, 2, 5, 4, 6}), C::from_numbers({3, 4, 6, 5, 2})};
}

std::vector<PermutationChromosome> mutated_chromosomes() { return selected_chromosomes(); }

std::vector<PermutationChromosome> mutated_routes() {
    return {C::from_numbers({4, 2, 6, 5, 3}), C::from_numbers({2, 5, 3, 6, 4}),
            C::from_numbers({6, 4, 5, 3, 2}), C::from_numbers({6, 4, 2, 3, 5}),
            C::from_numbers({5, 3, 2, 6, 4}), C::from_numbers({5, 6, 3, 2, 4}),
            C::from_numbers({3, 5, 2, 4, 6}), C::from_numbers({3, 6, 4, 2, 5})};
}

std::vector<double> mutated_fitness() { return {30, 31, 29, 30, 33, 35, 23, 27}; }

PermutationChromosome claimed_optimal_route() { return C::from_numbers({2, 3, 4, 5, 6}); }

std::vector<RouteClaim> route_claims() {
    return {
        {"closing optimum", claimed_optimal_route(), std::nullopt, true},
        {"best initial route", C::from_numbers({3, 2, 5, 4, 6}), 22.0, false},
        {"best post-mutation route", C::from_numbers({3, 5, 2, 4, 6}), 23.0, false},
    };
}

} // namespace seedga::worked_example
