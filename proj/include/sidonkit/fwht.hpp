#pragma once

#include <cstddef>
#include <cstdint>

namespace sidon {

// In-place fast Walsh-Hadamard transform; size must be a power of two.
// After the call, v[a] = sum_x (-1)^parity(a & x) * input[x].
inline void fwht(std::int32_t* v, std::size_t size) {
    for (std::size_t len = 1; len < size; len <<= 1) {
        for (std::size_t i = 0; i < size; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                std::int32_t u = v[j];
                std::int32_t w = v[j + len];
                v[j] = u + w;
                v[j + len] = u - w;
            }
        }
    }
}

}  // namespace sidon
