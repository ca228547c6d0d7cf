#include "qbdq/statevec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbdq {

RegisterShape RegisterShape::for_items(std::uint64_t item_count, int data_qubits) {
    RegisterShape shape;
    shape.index_qubits = ceil_log2(item_count);
    shape.data_qubits = data_qubits;
    shape.item_count = item_count;
    if (!shape.valid()) {
        throw std::invalid_argument("invalid register shape: item_count=" +
                                    std::to_string(item_count) +
                                    " data_qubits=" + std::to_string(data_qubits));
    }
    return shape;
}

bool RegisterShape::valid() const {
    if (item_count < 1 || data_qubits < 1 || index_qubits < 0) return false;
    if (index_qubits != ceil_log2(item_count)) return false;
    return total_qubits() <= kMaxTotalQubits;
}

StateVector StateVector::zeros(RegisterShape shape) {
    if (!shape.valid()) throw std::invalid_argument("invalid register shape");
    StateVector s;
    s.shape = shape;
    s.amplitudes.assign(shape.dimension(), Complex{0.0, 0.0});
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector prepare_uniform_index(RegisterShape shape) {
    StateVector s = StateVector::zeros(shape);
    const double amp = 1.0 / std::sqrt(static_cast<double>(shape.item_count));
    for (std::uint64_t i = 0; i < shape.item_count; ++i) {
        s.amplitudes[s.basis_index(i, 0)] = amp;
    }
    return s;
}

StateVector hadamard_all(StateVector state) {
    const std::size_t dim = state.amplitudes.size();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int q = 0; q < state.shape.total_qubits(); ++q) {
        const std::size_t half = std::size_t{1} << q;
        const std::size_t stride = half << 1;
        for (std::size_t base = 0; base < dim; base += stride) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex a = state.amplitudes[base + k];
                const Complex b = state.amplitudes[base + k + half];
                state.amplitudes[base + k] = (a + b) * inv_sqrt2;
                state.amplitudes[base + k + half] = (a - b) * inv_sqrt2;
            }
        }
    }
    return state;
}

namespace {

std::uint64_t outcome_count(const StateVector& s, Subregister which) {
    return which == Subregister::Index ? s.shape.index_dimension()
                                       : std::uint64_t{s.amplitudes.size()};
}

double outcome_probability(const StateVector& s, Subregister which, std::uint64_t outcome) {
    if (which == Subregister::All) return std::norm(s.amplitudes[outcome]);
    const std::size_t block = s.shape.data_dimension();
    const std::size_t begin = static_cast<std::size_t>(outcome) * block;
    double p = 0.0;
    for (std::size_t b = begin; b < begin + block; ++b) p += std::norm(s.amplitudes[b]);
    return p;
}

MeasurementOutcome project(const StateVector& s, Subregister which, std::uint64_t outcome,
                           double probability) {
    MeasurementOutcome result;
    result.observed = outcome;
    result.post_state = StateVector::zeros(s.shape);
    const double scale = 1.0 / std::sqrt(probability);
    if (which == Subregister::All) {
        result.post_state.amplitudes[outcome] = s.amplitudes[outcome] * scale;
    } else {
        const std::size_t block = s.shape.data_dimension();
        const std::size_t begin = static_cast<std::size_t>(outcome) * block;
        for (std::size_t b = begin; b < begin + block; ++b) {
            result.post_state.amplitudes[b] = s.amplitudes[b] * scale;
        }
    }
    return result;
}

}  // namespace

MeasurementOutcome measure_subregister(const StateVector& state, Subregister which, Rng& rng) {
    const double total = state.norm();
    if (total < kDegenerateNorm) {
        throw std::runtime_error("measure_subregister: degenerate state (norm " +
                                 std::to_string(total) + ")");
    }
    const std::uint64_t outcomes = outcome_count(state, which);
    const double u = uniform_unit(rng) * total * total;

    double cumulative = 0.0;
    std::uint64_t chosen = outcomes;  // sentinel
    std::uint64_t last_reachable = outcomes;
    for (std::uint64_t o = 0; o < outcomes; ++o) {
        const double p = outcome_probability(state, which, o);
        if (p < kUnreachableProbability) continue;
        cumulative += p;
        last_reachable = o;
        if (u < cumulative) {
            chosen = o;
            break;
        }
    }
    if (chosen == outcomes) chosen = last_reachable;  // float drift at the top end
    return project(state, which, chosen, outcome_probability(state, which, chosen));
}

MeasurementOutcome measure_subregister(const StateVector& state, Subregister which,
                                       std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return measure_subregister(state, which, rng);
}

MeasurementOutcome collapse_subregister(const StateVector& state, Subregister which,
                                        std::uint64_t outcome) {
    if (outcome >= outcome_count(state, which)) {
        throw std::out_of_range("collapse_subregister: outcome out of range");
    }
    const double p = outcome_probability(state, which, outcome);
    if (p < kUnreachableProbability) {
        throw std::invalid_argument("collapse_subregister: outcome " + std::to_string(outcome) +
                                    " has probability " + std::to_string(p));
    }
    return project(state, which, outcome, p);
}

double probability_of(const StateVector& state, std::uint64_t index_value,
                      std::uint64_t data_value) {
    if (index_value >= state.shape.index_dimension()) {
        throw std::out_of_range("probability_of: index value out of range");
    }
    if (data_value >= state.shape.data_dimension()) {
        throw std::out_of_range("probability_of: data value out of range");
    }
    return std::norm(state.amplitudes[state.basis_index(index_value, data_value)]);
}

double index_probability(const StateVector& state, std::uint64_t index_value) {
    if (index_value >= state.shape.index_dimension()) {
        throw std::out_of_range("index_probability: index value out of range");
    }
    return outcome_probability(state, Subregister::Index, index_value);
}

}  // namespace qbdq
