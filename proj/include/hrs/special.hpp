#pragma once

#include <cmath>
#include <stdexcept>

namespace hrs {

/// Gaussian tail probability Q(x) = Pr(N(0,1) > x).
/// Evaluated through erfc; relative error is that of the libm rational
/// approximation (well below 1e-12 over the range used here).
inline double q_function(double x) {
    return 0.5 * std::erfc(x * M_SQRT1_2);
}

// expm1(x)/x with the removable singularity at x = 0 filled in by its
// Taylor series. Replaces differences of exponentials that would cancel
// when the two rates are nearly equal.
inline double expm1_over_x(double x) {
    if (std::abs(x) < 1e-5) {
        return 1.0 + x * (0.5 + x * (1.0 / 6.0 + x / 24.0));
    }
    return std::expm1(x) / x;
}

// Regularized lower incomplete gamma P(n, x) for integer shape n >= 1.
// The complement form 1 - e^-x * sum_{k<n} x^k/k! cancels badly when
// x << n, so the direct lower-tail series is used there instead.
inline double gamma_cdf_integer_shape(int n, double x) {
    if (n < 1) throw std::invalid_argument("gamma_cdf_integer_shape: shape must be >= 1");
    if (x <= 0.0) return 0.0;
    if (x < n) {
        // P(n,x) = e^-x * sum_{j>=n} x^j / j!
        double term = std::exp(n * std::log(x) - x - std::lgamma(n + 1.0));
        double sum = term;
        for (int j = n + 1; j < n + 400; ++j) {
            term *= x / j;
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return sum;
    }
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < n; ++k) {
        term *= x / k;
        sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
}

}  // namespace hrs
