#pragma once

#include <bit>
#include <cstdint>

namespace qbdq {

// ceil(log2(value)) in exact integer arithmetic; 0 for value <= 1.
inline int ceil_log2(std::uint64_t value) {
    if (value <= 1) return 0;
    return std::bit_width(value - 1);
}

// Smallest k with 4^k >= value.
inline int ceil_log4(std::uint64_t value) {
    int k = 0;
    std::uint64_t v = 1;
    while (v < value) {
        v *= 4;
        ++k;
    }
    return k;
}

}  // namespace qbdq
