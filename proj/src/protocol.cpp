#include "qbdq/protocol.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace qbdq {

int required_data_qubits(std::span<const std::uint64_t> items,
                         std::span<const std::uint64_t> keys) {
    if (items.empty() || keys.empty()) {
        throw std::invalid_argument("required_data_qubits: empty input");
    }
    std::uint64_t max_value = 0;
    for (std::uint64_t v : items) max_value = std::max(max_value, v);
    for (std::uint64_t v : keys) max_value = std::max(max_value, v);
    return std::max(1, static_cast<int>(std::bit_width(max_value)));
}

Database Database::make(std::vector<std::uint64_t> items, std::vector<std::uint64_t> keys) {
    if (items.empty()) throw std::invalid_argument("database: no items");
    if (items.size() != keys.size()) {
        throw std::invalid_argument("database: " + std::to_string(items.size()) + " items vs " +
                                    std::to_string(keys.size()) + " keys");
    }
    const int data_qubits = required_data_qubits(items, keys);
    Database db;
    db.shape = RegisterShape::for_items(items.size(), data_qubits);
    db.items = std::move(items);
    db.keys = KeySequence{std::move(keys)};
    return db;
}

StateVector step1_key_state(const Database& db) {
    return oracle_k(prepare_uniform_index(db.shape), db.keys);
}

Step2Result step2_measure_offset(const StateVector& key_state, std::uint64_t query_index,
                                 Rng& rng, std::optional<std::uint64_t> forced_lambda) {
    const std::uint64_t rows = key_state.shape.item_count;
    if (query_index >= rows) {
        throw std::out_of_range("step2: query index " + std::to_string(query_index) +
                                " >= item count " + std::to_string(rows));
    }
    Step2Result result;
    MeasurementOutcome outcome =
        forced_lambda ? collapse_subregister(key_state, Subregister::Index, *forced_lambda)
                      : measure_subregister(key_state, Subregister::Index, rng);
    result.lambda = outcome.observed;

    // The data register collapsed alongside the index measurement; on a
    // protocol state it now holds exactly one value.
    bool found = false;
    for (std::uint64_t x = 0; x < key_state.shape.data_dimension(); ++x) {
        if (probability_of(outcome.post_state, result.lambda, x) > 0.5) {
            result.key_lambda = x;
            found = true;
            break;
        }
    }
    if (!found) {
        throw std::logic_error("step2: data register did not collapse to a single key");
    }
    result.offset.delta_s = (result.lambda + rows - query_index) % rows;
    result.post_state = std::move(outcome.post_state);
    return result;
}

Step3Result step3_rotate_encrypt(const Database& db, OffsetMessage offset) {
    const std::uint64_t rows = db.size();
    const std::uint64_t shift = offset.delta_s % rows;
    Step3Result result;
    result.rotated_keys.values.resize(rows);
    result.encrypted.values.resize(rows);
    for (std::uint64_t i = 0; i < rows; ++i) {
        result.rotated_keys.values[i] = db.keys.values[(i + shift) % rows];
        result.encrypted.values[i] = db.items[i] ^ result.rotated_keys.values[i];
    }
    result.data_state = oracle_d(prepare_uniform_index(db.shape), result.encrypted);
    return result;
}

RetrievalResult step45_retrieve_decrypt(const StateVector& data_state, std::uint64_t query_index,
                                        std::uint64_t key_lambda, std::uint64_t expected_cipher,
                                        std::optional<int> iterations, Rng& rng) {
    const GroverRetrieval g =
        grover_retrieve(data_state, query_index, expected_cipher, iterations, rng);
    RetrievalResult result;
    result.r_used = g.r_used;
    result.measured_index = g.observed_index;
    result.measured_data = g.observed_data;
    result.success = g.hit_target;
    if (result.success) result.decrypted = expected_cipher ^ key_lambda;
    return result;
}

ProtocolTranscript run_session(const Database& db, std::uint64_t query_index,
                               std::uint64_t rng_seed, const SessionOptions& options) {
    if (query_index >= db.size()) {
        throw std::out_of_range("run_session: query index out of range");
    }
    if (options.forced_lambda && *options.forced_lambda >= db.size()) {
        throw std::out_of_range("run_session: forced lambda out of range");
    }
    Rng rng(rng_seed);

    const StateVector key_state = step1_key_state(db);
    const Step2Result step2 = step2_measure_offset(key_state, query_index, rng,
                                                   options.forced_lambda);
    const Step3Result step3 = step3_rotate_encrypt(db, step2.offset);

    ProtocolTranscript t;
    t.client_id = options.client_id;
    t.query_index = query_index;
    t.lambda = step2.lambda;
    t.key_lambda = step2.key_lambda;
    t.delta_s = step2.offset.delta_s;
    t.rotated_keys = step3.rotated_keys;
    t.encrypted = step3.encrypted;
    t.rng_seed = rng_seed;

    // Offset algebra guarantees the key learned in step 2 now sits at the
    // queried row; anything else is an implementation bug.
    if (t.rotated_keys.values[query_index] != t.key_lambda) {
        throw std::logic_error("run_session: key alignment violated");
    }

    const std::uint64_t expected_cipher = step3.encrypted.values[query_index];
    t.grover = grover_scan(step3.data_state, query_index, expected_cipher);
    const int r_used = options.iterations.value_or(t.grover.r_star);
    const RetrievalResult retrieval = step45_retrieve_decrypt(
        step3.data_state, query_index, step2.key_lambda, expected_cipher, r_used, rng);

    t.r_used = retrieval.r_used;
    t.measured_index = retrieval.measured_index;
    t.measured_data = retrieval.measured_data;
    t.success = retrieval.success;
    if (retrieval.success) t.decrypted = retrieval.decrypted;
    return t;
}

CheckedSessionResult run_checked_session(const Database& db, std::uint64_t query_index,
                                         std::uint64_t rng_seed, const SessionOptions& options,
                                         const ChannelOptions& channel) {
    const std::size_t payload = static_cast<std::size_t>(db.shape.total_qubits());
    const std::size_t decoys = channel.decoy_count.value_or((payload + 3) / 4);

    CheckedSessionResult result;
    const int attempts = channel.max_restarts + 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        ++result.attempts;
        bool clean = true;
        // One decoy pass per quantum transmission (steps 1 and 3).
        for (int pass = 0; pass < 2 && clean; ++pass) {
            const std::uint64_t seed =
                derive_seed(rng_seed, static_cast<std::uint64_t>(attempt) * 2 + pass);
            const ChannelReport report = run_decoy_check(payload, decoys, channel.threshold,
                                                         channel.eavesdropper, seed);
            result.reports.push_back(report);
            clean = report.passed;
        }
        if (clean) {
            result.transcript = run_session(db, query_index, rng_seed, options);
            return result;
        }
    }
    result.aborted = true;
    return result;
}

std::string transcript_to_json(const ProtocolTranscript& t) {
    nlohmann::json scan = nlohmann::json::array();
    for (const GroverScanPoint& point : t.grover.per_iteration) {
        scan.push_back({{"r", point.iteration},
                        {"p_target", point.p_target},
                        {"p_index", point.p_index}});
    }
    nlohmann::json j;
    j["client_id"] = t.client_id;
    j["p"] = t.query_index;
    j["lambda"] = t.lambda;
    j["key_lambda"] = t.key_lambda;
    j["delta_s"] = t.delta_s;
    j["rotated_keys"] = t.rotated_keys.values;
    j["encrypted"] = t.encrypted.values;
    j["grover"] = {{"r_max", t.grover.r_max},
                   {"r_star", t.grover.r_star},
                   {"per_iteration", std::move(scan)}};
    j["r_used"] = t.r_used;
    j["measured"] = {{"index", t.measured_index}, {"data", t.measured_data}};
    if (t.decrypted) {
        j["decrypted"] = *t.decrypted;
    } else {
        j["decrypted"] = nullptr;
    }
    j["rng_seed"] = t.rng_seed;
    return j.dump(2);
}

void write_transcript(const std::string& path, const ProtocolTranscript& transcript) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open transcript path: " + path);
    out << transcript_to_json(transcript) << '\n';
}

}  // namespace qbdq
