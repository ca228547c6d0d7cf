#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qbdq/bitmath.hpp"
#include "qbdq/random.hpp"

namespace qbdq {

using Complex = std::complex<double>;

// Tolerances used across the state-vector layer.
inline constexpr double kNormTolerance = 1e-10;           // allowed norm drift
inline constexpr double kDegenerateNorm = 1e-6;           // measurement rejects below
inline constexpr double kUnreachableProbability = 1e-12;  // outcomes below are never sampled
inline constexpr int kMaxTotalQubits = 30;                // 2^30 amplitudes = 16 GiB, hard stop

/// Dimensions of a register split into an index block (high-order qubits)
/// and a data block (low-order qubits). item_count tracks how many index
/// values are actually populated; it need not be a power of two.
struct RegisterShape {
    int index_qubits = 0;            // qubits addressing database rows
    int data_qubits = 0;             // qubits holding one item/key value
    std::uint64_t item_count = 0;    // populated index values

    // Shape for item_count rows of data_qubits-bit values; index_qubits is
    // the smallest register that can address every row.
    static RegisterShape for_items(std::uint64_t item_count, int data_qubits);

    int total_qubits() const { return index_qubits + data_qubits; }
    std::size_t dimension() const { return std::size_t{1} << total_qubits(); }
    std::uint64_t index_dimension() const { return std::uint64_t{1} << index_qubits; }
    std::uint64_t data_dimension() const { return std::uint64_t{1} << data_qubits; }
    bool valid() const;

    friend bool operator==(const RegisterShape&, const RegisterShape&) = default;
};

/// Dense complex amplitudes over a shaped register. Basis encoding:
/// basis = index_value * 2^data_qubits + data_value.
struct StateVector {
    RegisterShape shape;
    std::vector<Complex> amplitudes;

    static StateVector zeros(RegisterShape shape);

    std::size_t basis_index(std::uint64_t index_value, std::uint64_t data_value) const {
        return static_cast<std::size_t>((index_value << shape.data_qubits) | data_value);
    }
    double norm() const;
};

enum class Subregister { Index, All };

struct MeasurementOutcome {
    std::uint64_t observed = 0;  // basis value of the measured sub-register
    StateVector post_state;      // renormalized, supported only on `observed`
};

/// (1/sqrt(item_count)) * sum_i |i>|0...0>. Amplitudes are written directly,
/// so item_count does not have to be a power of two.
StateVector prepare_uniform_index(RegisterShape shape);

/// Tensor Hadamard over every qubit of the register (its own inverse).
StateVector hadamard_all(StateVector state);

/// Projective measurement of the chosen sub-register. Sampling is inverse-CDF
/// over the cumulative outcome probabilities using uniform_unit(rng); outcomes
/// with probability < kUnreachableProbability are skipped and can never be
/// observed. The post state is renormalized.
MeasurementOutcome measure_subregister(const StateVector& state, Subregister which, Rng& rng);
MeasurementOutcome measure_subregister(const StateVector& state, Subregister which,
                                       std::uint64_t rng_seed);

/// Projection onto a chosen outcome without sampling (used to replay a run
/// with a pinned measurement result). Rejects outcomes whose probability is
/// below kUnreachableProbability.
MeasurementOutcome collapse_subregister(const StateVector& state, Subregister which,
                                        std::uint64_t outcome);

/// |amplitude(index_value, data_value)|^2.
double probability_of(const StateVector& state, std::uint64_t index_value,
                      std::uint64_t data_value);

/// Probability of observing index_value on the index sub-register.
double index_probability(const StateVector& state, std::uint64_t index_value);

}  // namespace qbdq
