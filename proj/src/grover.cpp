#include "qbdq/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qbdq {

StateVector grover_operator(StateVector state, std::uint64_t query_index) {
    state = oracle_s(std::move(state), query_index);
    state = hadamard_all(std::move(state));
    state = oracle_p(std::move(state));
    state = hadamard_all(std::move(state));
    return state;
}

int max_grover_iterations(int total_qubits) {
    if (total_qubits < 0) throw std::invalid_argument("max_grover_iterations: negative qubits");
    const double bound = (std::numbers::pi / 4.0) * std::sqrt(std::exp2(total_qubits));
    return static_cast<int>(std::ceil(bound));
}

GroverScan grover_scan(const StateVector& state, std::uint64_t query_index,
                       std::uint64_t target_data) {
    if (query_index >= state.shape.index_dimension()) {
        throw std::out_of_range("grover_scan: query index out of range");
    }
    if (target_data >= state.shape.data_dimension()) {
        throw std::out_of_range("grover_scan: target data out of range");
    }
    GroverScan scan;
    scan.r_max = max_grover_iterations(state.shape);
    scan.per_iteration.reserve(scan.r_max + 1);

    StateVector current = state;
    for (int r = 0; r <= scan.r_max; ++r) {
        GroverScanPoint point;
        point.iteration = r;
        point.p_target = probability_of(current, query_index, target_data);
        point.p_index = index_probability(current, query_index);
        scan.per_iteration.push_back(point);
        if (r < scan.r_max) current = grover_operator(std::move(current), query_index);
    }

    scan.r_star = 0;
    for (int r = 1; r <= scan.r_max; ++r) {
        if (scan.per_iteration[r].p_target > scan.per_iteration[scan.r_star].p_target) {
            scan.r_star = r;
        }
    }
    return scan;
}

GroverRetrieval grover_retrieve(const StateVector& state, std::uint64_t query_index,
                                std::uint64_t target_data, std::optional<int> iterations,
                                Rng& rng) {
    GroverRetrieval result;
    result.r_used = iterations ? *iterations : grover_scan(state, query_index, target_data).r_star;
    if (result.r_used < 0) throw std::invalid_argument("grover_retrieve: negative iterations");

    StateVector current = state;
    for (int r = 0; r < result.r_used; ++r) {
        current = grover_operator(std::move(current), query_index);
    }
    const MeasurementOutcome outcome = measure_subregister(current, Subregister::All, rng);
    result.observed_index = outcome.observed >> state.shape.data_qubits;
    result.observed_data = outcome.observed & (state.shape.data_dimension() - 1);
    result.hit_target =
        result.observed_index == query_index && result.observed_data == target_data;
    return result;
}

GroverRetrieval grover_retrieve(const StateVector& state, std::uint64_t query_index,
                                std::uint64_t target_data, std::optional<int> iterations,
                                std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return grover_retrieve(state, query_index, target_data, iterations, rng);
}

}  // namespace qbdq
