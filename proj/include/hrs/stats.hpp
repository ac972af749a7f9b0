#pragma once

#include <cmath>
#include <cstdint>

namespace hrs {

struct Interval {
    double lo, hi;
};

/// Wilson score interval for a binomial proportion (default 95%).
inline Interval wilson_interval(std::uint64_t errors, std::uint64_t frames,
                                double z = 1.959963984540054) {
    if (frames == 0) return {0.0, 1.0};
    const double n = static_cast<double>(frames);
    const double p = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    double lo = center - half, hi = center + half;
    if (lo < 0.0) lo = 0.0;
    if (hi > 1.0) hi = 1.0;
    return {lo, hi};
}

}  // namespace hrs
