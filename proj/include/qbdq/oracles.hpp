#pragma once

#include <cstdint>
#include <vector>

#include "qbdq/statevec.hpp"

namespace qbdq {

/// Per-row encryption keys; entry i must fit the data register.
struct KeySequence {
    std::vector<std::uint64_t> values;

    friend bool operator==(const KeySequence&, const KeySequence&) = default;
};

/// Encrypted items (item XOR key), same layout constraints as KeySequence.
struct EncryptedData {
    std::vector<std::uint64_t> values;

    friend bool operator==(const EncryptedData&, const EncryptedData&) = default;
};

// The four oracle transforms. All are matrix-free permutations or diagonal
// sign flips of the amplitude array, so they preserve norm exactly.

/// |i>|x> -> |i>|x XOR keys[i]>. Requires the state's index support to lie
/// inside [0, keys.size()); on the protocol's prepared states (data register
/// zero) this embeds key i into row i.
StateVector oracle_k(StateVector state, const KeySequence& keys);

/// Same transform with encrypted items in place of keys.
StateVector oracle_d(StateVector state, const EncryptedData& enc);

/// Negates every amplitude whose index register equals query_index.
StateVector oracle_s(StateVector state, std::uint64_t query_index);

/// Conditional phase: the all-zeros basis state keeps its sign, every other
/// amplitude is negated (the leading global minus is kept literally).
StateVector oracle_p(StateVector state);

}  // namespace qbdq
