#pragma once

#include <concepts>

#include "tcdeg/errors.hpp"

namespace tcdeg {

// Laguerre polynomial L_n(x) by the three-term recurrence
//   (k + 1) L_{k+1} = (2k + 1 - x) L_k - k L_{k-1}.
// Stable for x >= 0; avoids the factorials of the explicit sum.
template <std::floating_point T>
T laguerre(int n, T x) {
    if (n < 0) throw ConfigError("Laguerre index must be non-negative");
    if (n == 0) return T(1);
    T prev = T(1);
    T curr = T(1) - x;
    for (int k = 1; k < n; ++k) {
        const T next = ((T(2 * k + 1) - x) * curr - T(k) * prev) / T(k + 1);
        prev = curr;
        curr = next;
    }
    return curr;
}

}  // namespace tcdeg
