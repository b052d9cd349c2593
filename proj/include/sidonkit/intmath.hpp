#pragma once

#include <cstdint>

namespace sidon {

// floor(sqrt(n)) by the classic digit-by-digit method; no floating point,
// exact over the full uint64 range.
inline std::uint64_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = 0;
    std::uint64_t bit = std::uint64_t(1) << 62;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

}  // namespace sidon
