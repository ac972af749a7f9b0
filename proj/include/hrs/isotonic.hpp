#pragma once

#include <vector>

namespace hrs {

/// Weighted pool-adjacent-violators fit, non-increasing.
/// Returns the least-squares monotone (non-increasing) sequence under the
/// given nonnegative weights; w may be empty for uniform weights.
std::vector<double> isotonic_non_increasing(const std::vector<double>& y,
                                            const std::vector<double>& w = {});

}  // namespace hrs
