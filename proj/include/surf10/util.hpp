#pragma once

#include <cstdint>
#include <stdexcept>

namespace surf10 {

/// Binomial coefficient as a 64-bit integer; returns 0 for k < 0 or k > n.
/// Safe for the small arguments used throughout (n below ~60).
inline int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: r is C(n-k+i-1, i-1) scaled stepwise
    }
    return r;
}

/// dim of the space of degree-d forms in nvars variables: C(d + nvars - 1, nvars - 1).
inline int64_t dim_forms(int nvars, int d) {
    if (d < 0) return 0;
    return binomial(d + nvars - 1, nvars - 1);
}

} // namespace surf10
