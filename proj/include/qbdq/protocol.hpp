#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbdq/channel.hpp"
#include "qbdq/grover.hpp"
#include "qbdq/oracles.hpp"
#include "qbdq/statevec.hpp"

namespace qbdq {

/// The server's item list and per-row key sequence, with the register shape
/// derived from them.
struct Database {
    std::vector<std::uint64_t> items;
    KeySequence keys;
    RegisterShape shape;

    static Database make(std::vector<std::uint64_t> items, std::vector<std::uint64_t> keys);

    std::uint64_t size() const { return shape.item_count; }
};

/// The one classical message a client sends: (lambda - query_index) mod N.
struct OffsetMessage {
    std::uint64_t delta_s = 0;
};

/// Data qubits needed to hold every item and key: ceil(log2(max value + 1)),
/// at least 1. Items are included alongside keys because the encrypted items
/// are written into the same register.
int required_data_qubits(std::span<const std::uint64_t> items,
                         std::span<const std::uint64_t> keys);

struct Step2Result {
    std::uint64_t lambda = 0;      // measured index register value
    std::uint64_t key_lambda = 0;  // key collapsed into the data register
    OffsetMessage offset;
    StateVector post_state;
};

struct Step3Result {
    KeySequence rotated_keys;  // rotated_keys[i] = keys[(i + delta_s) mod N]
    EncryptedData encrypted;   // encrypted[i] = items[i] XOR rotated_keys[i]
    StateVector data_state;
};

struct RetrievalResult {
    bool success = false;
    std::uint64_t decrypted = 0;  // valid only on success
    std::uint64_t measured_index = 0;
    std::uint64_t measured_data = 0;
    int r_used = 0;
};

/// Full record of one client session. All sampling comes from a single
/// generator seeded with rng_seed, drawn in step order.
struct ProtocolTranscript {
    std::string client_id;
    std::uint64_t query_index = 0;
    std::uint64_t lambda = 0;
    std::uint64_t key_lambda = 0;
    std::uint64_t delta_s = 0;
    KeySequence rotated_keys;
    EncryptedData encrypted;
    GroverScan grover;
    int r_used = 0;
    std::uint64_t measured_index = 0;
    std::uint64_t measured_data = 0;
    bool success = false;
    std::optional<std::uint64_t> decrypted;  // empty when the measurement missed
    std::uint64_t rng_seed = 0;
};

struct SessionOptions {
    std::string client_id = "client";
    std::optional<std::uint64_t> forced_lambda;  // replay a pinned step-2 outcome
    std::optional<int> iterations;               // empty = use the scan's r_star
};

/// Server encodes the key sequence: oracle_k on the uniform index state.
StateVector step1_key_state(const Database& db);

/// Client measures the index register (or collapses to forced_lambda), reads
/// the key off the collapsed data register, and forms the offset message.
Step2Result step2_measure_offset(const StateVector& key_state, std::uint64_t query_index,
                                 Rng& rng, std::optional<std::uint64_t> forced_lambda = {});

/// Server rotates keys by the offset, encrypts, and encodes the ciphertexts.
Step3Result step3_rotate_encrypt(const Database& db, OffsetMessage offset);

/// Client amplifies and measures; a hit decrypts with the step-2 key, a miss
/// reports the stray outcome.
RetrievalResult step45_retrieve_decrypt(const StateVector& data_state, std::uint64_t query_index,
                                        std::uint64_t key_lambda, std::uint64_t expected_cipher,
                                        std::optional<int> iterations, Rng& rng);

/// Steps 1-5 for one client. Independent clients are independent sessions
/// over the same database.
ProtocolTranscript run_session(const Database& db, std::uint64_t query_index,
                               std::uint64_t rng_seed, const SessionOptions& options = {});

struct ChannelOptions {
    std::optional<std::size_t> decoy_count;  // empty = ceil(total_qubits / 4)
    double threshold = 0.05;
    Eavesdropper eavesdropper = Eavesdropper::None;
    int max_restarts = 3;
};

struct CheckedSessionResult {
    std::optional<ProtocolTranscript> transcript;  // empty when aborted
    std::vector<ChannelReport> reports;            // one per decoy pass, in order
    int attempts = 0;
    bool aborted = false;
};

/// run_session with a decoy eavesdropping check on each of the two quantum
/// transmissions. A failed check cancels and restarts the session, up to
/// max_restarts restarts; the session itself always consumes the base seed,
/// so its transcript matches an unchecked run with the same seed.
CheckedSessionResult run_checked_session(const Database& db, std::uint64_t query_index,
                                         std::uint64_t rng_seed, const SessionOptions& options,
                                         const ChannelOptions& channel);

std::string transcript_to_json(const ProtocolTranscript& transcript);
void write_transcript(const std::string& path, const ProtocolTranscript& transcript);

}  // namespace qbdq
