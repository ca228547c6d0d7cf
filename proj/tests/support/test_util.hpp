#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qbdq/statevec.hpp"

namespace testutil {

// Normalized state with gaussian-random complex amplitudes.
inline qbdq::StateVector random_state(qbdq::RegisterShape shape, std::uint64_t seed) {
    qbdq::Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    qbdq::StateVector s = qbdq::StateVector::zeros(shape);
    for (auto& a : s.amplitudes) a = {gauss(rng), gauss(rng)};
    const double norm = s.norm();
    for (auto& a : s.amplitudes) a /= norm;
    return s;
}

inline double max_amplitude_diff(const qbdq::StateVector& a, const qbdq::StateVector& b) {
    double max_diff = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    }
    return max_diff;
}

// Pearson statistic against a uniform distribution over counts.size() bins.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts,
                                 std::uint64_t samples) {
    const double expected = static_cast<double>(samples) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (std::uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

// 0.999 quantile of chi-square with 15 degrees of freedom (computed offline).
inline constexpr double kChiSq999Dof15 = 37.6973;

// The 16-row sample database used across the test suites (same content as
// data/example16.json) plus the values the scripted walkthrough must hit.
inline const std::vector<std::uint64_t> kSampleItems = {5, 9, 6, 12, 2, 11, 11, 6,
                                                        5, 10, 7, 15, 6, 11, 6, 9};
inline const std::vector<std::uint64_t> kSampleKeys = {14, 8, 3, 4, 7, 1, 11, 6,
                                                       15, 2, 12, 13, 0, 5, 9, 10};
inline const std::vector<std::uint64_t> kSampleRotatedKeys = {7, 1, 11, 6, 15, 2, 12, 13,
                                                              0, 5, 9, 10, 14, 8, 3, 4};
inline const std::vector<std::uint64_t> kSampleEncrypted = {2, 8, 13, 10, 13, 9, 7, 11,
                                                            5, 15, 14, 5, 8, 3, 5, 13};

}  // namespace testutil
