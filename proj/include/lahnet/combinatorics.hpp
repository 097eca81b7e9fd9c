#pragma once

#include <cstddef>

#include "lahnet/bigint.hpp"

namespace lahnet {

inline BigInt factorial(std::size_t n) {
    BigInt result = 1;
    for (std::size_t i = 2; i <= n; ++i) result *= i;
    return result;
}

// binomial(n, k) = 0 for k > n. The running product is an integer after
// every step, so the division is exact.
inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace lahnet
