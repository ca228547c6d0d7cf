#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qbdq/random.hpp"

namespace qbdq {

/// Measurement basis of a decoy photon: Z = {|0>,|1>}, X = {|+>,|->}.
enum class Basis { Z, X };

enum class Eavesdropper { None, InterceptResend };

/// One decoy qubit, recorded classically as (basis, bit). bit selects |0>/|1>
/// in the Z basis and |+>/|-> in the X basis.
struct DecoyPhoton {
    Basis basis = Basis::Z;
    int bit = 0;
    std::size_t position = 0;  // slot in the transmitted sequence
};

struct DecoyBatch {
    std::vector<std::size_t> positions;  // ascending, distinct
    std::vector<DecoyPhoton> photons;    // photons[k].position == positions[k]
};

/// Verdict of one eavesdropping check.
struct ChannelReport {
    std::size_t decoys_sent = 0;
    std::size_t mismatches = 0;
    double error_rate = 0.0;
    double threshold = 0.0;
    bool passed = false;  // error_rate <= threshold
};

/// Draws decoy_count distinct slots out of payload_length + decoy_count and a
/// uniform (basis, bit) pair for each.
DecoyBatch insert_decoys(std::size_t payload_length, std::size_t decoy_count, Rng& rng);
DecoyBatch insert_decoys(std::size_t payload_length, std::size_t decoy_count,
                         std::uint64_t rng_seed);

/// Measures one photon in eve_basis and re-prepares the observed state. A
/// matching basis preserves the photon; a mismatch yields a uniform bit in
/// the wrong basis.
DecoyPhoton intercept_resend_photon(const DecoyPhoton& photon, Basis eve_basis, Rng& rng);

/// Passes the decoys through the channel under the chosen eavesdropper model.
std::vector<DecoyPhoton> transmit(const std::vector<DecoyPhoton>& decoys,
                                  Eavesdropper eavesdropper, Rng& rng);

/// Receiver measures every decoy in its announced preparation basis and the
/// sender compares bits. Measuring in the preparation basis is deterministic;
/// a received photon in the other basis collapses to a uniform bit.
ChannelReport check_decoys(const std::vector<DecoyPhoton>& sent,
                           const std::vector<DecoyPhoton>& received, double threshold, Rng& rng);

/// insert -> transmit -> check as one seeded pass over a payload of
/// payload_length qubits.
ChannelReport run_decoy_check(std::size_t payload_length, std::size_t decoy_count,
                              double threshold, Eavesdropper eavesdropper,
                              std::uint64_t rng_seed);

std::string report_to_json(const ChannelReport& report);

}  // namespace qbdq
