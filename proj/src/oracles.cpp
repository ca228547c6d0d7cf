#include "qbdq/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qbdq {

namespace {

constexpr double kSupportEps = 1e-12;  // amplitude magnitude counted as support

void check_values(const std::vector<std::uint64_t>& values, const RegisterShape& shape,
                  const char* what) {
    if (values.size() != shape.item_count) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(shape.item_count) + " entries, got " +
                                    std::to_string(values.size()));
    }
    for (std::uint64_t v : values) {
        if (v >= shape.data_dimension()) {
            throw std::invalid_argument(std::string(what) + ": value " + std::to_string(v) +
                                        " does not fit " + std::to_string(shape.data_qubits) +
                                        " data qubits");
        }
    }
}

// XOR-embed values[i] into the data register of every index-i basis state.
// An XOR by a constant is a pairing of basis states, so swapping each pair
// once applies the permutation in place.
StateVector xor_embed(StateVector state, const std::vector<std::uint64_t>& values,
                      const char* what) {
    check_values(values, state.shape, what);
    const std::uint64_t rows = state.shape.item_count;
    const std::uint64_t block = state.shape.data_dimension();
    for (std::uint64_t i = rows; i < state.shape.index_dimension(); ++i) {
        for (std::uint64_t x = 0; x < block; ++x) {
            if (std::abs(state.amplitudes[state.basis_index(i, x)]) > kSupportEps) {
                throw std::invalid_argument(std::string(what) + ": state has support on index " +
                                            std::to_string(i) + " >= item count " +
                                            std::to_string(rows));
            }
        }
    }
    for (std::uint64_t i = 0; i < rows; ++i) {
        const std::uint64_t v = values[i];
        if (v == 0) continue;
        for (std::uint64_t x = 0; x < block; ++x) {
            const std::uint64_t y = x ^ v;
            if (y > x) {
                std::swap(state.amplitudes[state.basis_index(i, x)],
                          state.amplitudes[state.basis_index(i, y)]);
            }
        }
    }
    return state;
}

}  // namespace

StateVector oracle_k(StateVector state, const KeySequence& keys) {
    return xor_embed(std::move(state), keys.values, "oracle_k");
}

StateVector oracle_d(StateVector state, const EncryptedData& enc) {
    return xor_embed(std::move(state), enc.values, "oracle_d");
}

StateVector oracle_s(StateVector state, std::uint64_t query_index) {
    if (query_index >= state.shape.index_dimension()) {
        throw std::out_of_range("oracle_s: query index " + std::to_string(query_index) +
                                " out of range");
    }
    const std::uint64_t block = state.shape.data_dimension();
    for (std::uint64_t x = 0; x < block; ++x) {
        state.amplitudes[state.basis_index(query_index, x)] *= -1.0;
    }
    return state;
}

StateVector oracle_p(StateVector state) {
    for (std::size_t b = 1; b < state.amplitudes.size(); ++b) {
        state.amplitudes[b] *= -1.0;
    }
    return state;
}

}  // namespace qbdq
