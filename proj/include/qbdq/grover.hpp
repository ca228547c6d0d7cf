#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbdq/oracles.hpp"
#include "qbdq/statevec.hpp"

namespace qbdq {

struct GroverScanPoint {
    int iteration = 0;
    double p_target = 0.0;  // probability of the exact (query_index, target_data) pair
    double p_index = 0.0;   // probability of query_index over all data values
};

/// Per-iteration probabilities of one amplification run, from the initial
/// state (iteration 0) up to the iteration bound.
struct GroverScan {
    std::vector<GroverScanPoint> per_iteration;
    int r_star = 0;  // smallest iteration count maximizing p_target
    int r_max = 0;
};

struct GroverRetrieval {
    int r_used = 0;
    std::uint64_t observed_index = 0;
    std::uint64_t observed_data = 0;
    bool hit_target = false;  // observed pair equals (query_index, target_data)
};

/// One amplification step: hadamard_all . oracle_p . hadamard_all . oracle_s.
StateVector grover_operator(StateVector state, std::uint64_t query_index);

/// ceil((pi/4) * sqrt(2^total_qubits)).
int max_grover_iterations(int total_qubits);
inline int max_grover_iterations(const RegisterShape& shape) {
    return max_grover_iterations(shape.total_qubits());
}

/// Applies grover_operator up to the iteration bound, recording p_target and
/// p_index at every count (including 0). Pure amplitude arithmetic; no
/// sampling involved. Ties in r_star break toward the smaller count.
GroverScan grover_scan(const StateVector& state, std::uint64_t query_index,
                       std::uint64_t target_data);

/// Applies `iterations` steps (r_star from a fresh scan when unset), then
/// measures the full register. A miss is a modeled outcome, not an error.
GroverRetrieval grover_retrieve(const StateVector& state, std::uint64_t query_index,
                                std::uint64_t target_data, std::optional<int> iterations,
                                Rng& rng);
GroverRetrieval grover_retrieve(const StateVector& state, std::uint64_t query_index,
                                std::uint64_t target_data, std::optional<int> iterations,
                                std::uint64_t rng_seed);

}  // namespace qbdq
