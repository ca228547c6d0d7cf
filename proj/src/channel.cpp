#include "qbdq/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace qbdq {

DecoyBatch insert_decoys(std::size_t payload_length, std::size_t decoy_count, Rng& rng) {
    if (decoy_count < 1) throw std::invalid_argument("insert_decoys: decoy_count must be >= 1");
    const std::size_t slots = payload_length + decoy_count;

    // Partial Fisher-Yates over the slot list, then sort the chosen prefix.
    std::vector<std::size_t> pool(slots);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t k = 0; k < decoy_count; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(rng() % (slots - k));
        std::swap(pool[k], pool[j]);
    }
    DecoyBatch batch;
    batch.positions.assign(pool.begin(), pool.begin() + decoy_count);
    std::sort(batch.positions.begin(), batch.positions.end());

    batch.photons.reserve(decoy_count);
    for (std::size_t pos : batch.positions) {
        DecoyPhoton photon;
        photon.basis = uniform_bit(rng) ? Basis::X : Basis::Z;
        photon.bit = uniform_bit(rng);
        photon.position = pos;
        batch.photons.push_back(photon);
    }
    return batch;
}

DecoyBatch insert_decoys(std::size_t payload_length, std::size_t decoy_count,
                         std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return insert_decoys(payload_length, decoy_count, rng);
}

DecoyPhoton intercept_resend_photon(const DecoyPhoton& photon, Basis eve_basis, Rng& rng) {
    if (eve_basis == photon.basis) return photon;
    DecoyPhoton resent;
    resent.basis = eve_basis;
    resent.bit = uniform_bit(rng);
    resent.position = photon.position;
    return resent;
}

std::vector<DecoyPhoton> transmit(const std::vector<DecoyPhoton>& decoys,
                                  Eavesdropper eavesdropper, Rng& rng) {
    if (eavesdropper == Eavesdropper::None) return decoys;
    std::vector<DecoyPhoton> out;
    out.reserve(decoys.size());
    for (const DecoyPhoton& photon : decoys) {
        const Basis eve_basis = uniform_bit(rng) ? Basis::X : Basis::Z;
        out.push_back(intercept_resend_photon(photon, eve_basis, rng));
    }
    return out;
}

ChannelReport check_decoys(const std::vector<DecoyPhoton>& sent,
                           const std::vector<DecoyPhoton>& received, double threshold, Rng& rng) {
    if (sent.size() != received.size()) {
        throw std::invalid_argument("check_decoys: sent/received length mismatch");
    }
    if (sent.empty()) throw std::invalid_argument("check_decoys: no decoys");

    ChannelReport report;
    report.decoys_sent = sent.size();
    report.threshold = threshold;
    for (std::size_t k = 0; k < sent.size(); ++k) {
        const int observed =
            received[k].basis == sent[k].basis ? received[k].bit : uniform_bit(rng);
        if (observed != sent[k].bit) ++report.mismatches;
    }
    report.error_rate =
        static_cast<double>(report.mismatches) / static_cast<double>(report.decoys_sent);
    report.passed = report.error_rate <= threshold;
    return report;
}

ChannelReport run_decoy_check(std::size_t payload_length, std::size_t decoy_count,
                              double threshold, Eavesdropper eavesdropper,
                              std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    const DecoyBatch batch = insert_decoys(payload_length, decoy_count, rng);
    const std::vector<DecoyPhoton> received = transmit(batch.photons, eavesdropper, rng);
    return check_decoys(batch.photons, received, threshold, rng);
}

std::string report_to_json(const ChannelReport& report) {
    nlohmann::json j;
    j["decoys_sent"] = report.decoys_sent;
    j["mismatches"] = report.mismatches;
    j["error_rate"] = report.error_rate;
    j["threshold"] = report.threshold;
    j["passed"] = report.passed;
    return j.dump(2);
}

}  // namespace qbdq
