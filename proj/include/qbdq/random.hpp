#pragma once

#include <cstdint>
#include <random>

namespace qbdq {

// All sampling in the simulator draws from explicitly seeded mt19937_64
// engines so that every run is reproducible from its seed alone.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
// Used instead of std::uniform_real_distribution so the mapping from seed
// to sample stream is fixed by this file, not by the standard library.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_bit(Rng& rng) {
    return static_cast<int>(rng() & 1u);
}

// splitmix64 finalizer; decorrelates sub-streams derived from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace qbdq
