#include "hrs/analysis.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hrs/quadrature.hpp"
#include "hrs/special.hpp"

namespace hrs {

void SchemeParams::validate() const {
    if (lambdas.lambda1.size() != lambdas.lambda2.size() || lambdas.lambda1.empty()) {
        throw std::invalid_argument("SchemeParams: lambda lists empty or mismatched");
    }
    if (!(lambdas.lambda0 > 0.0)) throw std::invalid_argument("SchemeParams: lambda0 must be > 0");
    for (double l : lambdas.lambda1)
        if (!(l > 0.0)) throw std::invalid_argument("SchemeParams: lambda1 entries must be > 0");
    for (double l : lambdas.lambda2)
        if (!(l > 0.0)) throw std::invalid_argument("SchemeParams: lambda2 entries must be > 0");
    if (!(gamma_t1 > 0.0) || !(gamma_td > 0.0)) {
        throw std::invalid_argument("SchemeParams: thresholds must be > 0");
    }
    if (gamma_t1 > gamma_td * (1.0 + 1e-12)) {
        throw std::invalid_argument("SchemeParams: gamma_t1 must not exceed gamma_td");
    }
}

namespace {

// broadened per-branch rate below the destination threshold
std::vector<double> branch_rates(const SchemeParams& p) {
    const double r = p.gamma_t1 / p.gamma_td;
    std::vector<double> a(p.lambdas.lambda1.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = r * p.lambdas.lambda1[i] + p.lambdas.lambda2[i];
    }
    return a;
}

}  // namespace

SchemeParams scheme_params(const NetworkConfig& cfg, double gamma_t1, double gamma_td) {
    SchemeParams p;
    p.lambdas = lambda_params(cfg);
    p.gamma_t1 = gamma_t1;
    p.gamma_td = gamma_td;
    p.validate();
    return p;
}

double hrs_cdf(const SchemeParams& p, double gamma) {
    p.validate();
    if (!(gamma >= 0.0)) throw std::invalid_argument("hrs_cdf: gamma must be >= 0");
    if (gamma == 0.0) return 0.0;
    const int n = p.n();
    if (n > 24) throw std::invalid_argument("hrs_cdf: n > 24 unsupported (2^n terms)");

    const auto a = branch_rates(p);
    const double l0 = p.lambdas.lambda0;
    const double e0 = std::exp(-l0 * gamma);
    const double one_minus_e0 = -std::expm1(-l0 * gamma);

    // Per subset b with rate c2 = sum_{i in b} a_i and sign (-1)^|b|, the
    // convolution term is
    //   sign * (l0 * gamma * e0 * expm1((l0 - c2) gamma)/((l0 - c2) gamma)
    //           - (1 - e0)),
    // which is exact for c2 != l0 and reproduces the analytic limit
    //   l0 gamma e0 - (1 - e0)
    // smoothly as c2 -> l0 (the coincident-rate case of the closed form).
    //
    // Subsets are walked in Gray-code order with incremental c2 updates;
    // the alternating signs are accumulated with Neumaier compensation.
    const std::uint64_t count = (1ull << n) - 1ull;
    double c2 = 0.0;
    int sign = 1;
    std::uint64_t code = 0;
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t k = 1; k <= count; ++k) {
        const std::uint64_t g = k ^ (k >> 1);  // Gray code of k
        const std::uint64_t flipped = g ^ code;
        const int bit = std::countr_zero(flipped);
        if (g > code) {
            c2 += a[static_cast<std::size_t>(bit)];
        } else {
            c2 -= a[static_cast<std::size_t>(bit)];
        }
        code = g;
        sign = -sign;

        const double x = (l0 - c2) * gamma;
        const double term = sign * (l0 * gamma * e0 * expm1_over_x(x) - one_minus_e0);

        // Neumaier summation
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    double v = sum + comp;
    if (v < 0.0 && v > -1e-12) v = 0.0;
    return v;
}

double hrs_fer_analytical(const SchemeParams& p) { return hrs_cdf(p, p.gamma_td); }

double hrs_fer_asymptotic(const SchemeParams& p) {
    p.validate();
    const int n = p.n();
    const double r = p.gamma_t1 / p.gamma_td;
    double prod = p.lambdas.lambda0;
    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        prod *= p.lambdas.lambda2[k] * (1.0 + r * p.lambdas.lambda1[k] / p.lambdas.lambda2[k]);
    }
    return std::pow(p.gamma_td, n + 1) / (n + 1) * prod;
}

double pdfrs_fer(const SchemeParams& p) {
    p.validate();
    const int n = p.n();
    double prod = p.lambdas.lambda0;
    for (double l2 : p.lambdas.lambda2) prod *= l2;
    return std::pow(p.gamma_td, n + 1) / (n + 1) * prod;
}

double afrs_fer(const SchemeParams& p) {
    p.validate();
    const int n = p.n();
    double prod = p.lambdas.lambda0;
    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        prod *= p.lambdas.lambda2[k] * (1.0 + p.lambdas.lambda1[k] / p.lambdas.lambda2[k]);
    }
    return std::pow(p.gamma_td, n + 1) / (n + 1) * prod;
}

double hrs_gain_over_afrs(const SchemeParams& p) {
    p.validate();
    const double r = p.gamma_t1 / p.gamma_td;
    double gain = 1.0;
    for (std::size_t i = 0; i < p.lambdas.lambda1.size(); ++i) {
        const double ratio = p.lambdas.lambda1[i] / p.lambdas.lambda2[i];
        gain *= (1.0 + ratio) / (1.0 + r * ratio);
    }
    return gain;
}

double relay_branch_cdf(const SchemeParams& p, int i, double gamma) {
    p.validate();
    if (i < 0 || i >= p.n()) throw std::invalid_argument("relay_branch_cdf: bad relay index");
    if (!(gamma >= 0.0)) throw std::invalid_argument("relay_branch_cdf: gamma must be >= 0");
    const std::size_t k = static_cast<std::size_t>(i);
    const double l1 = p.lambdas.lambda1[k], l2 = p.lambdas.lambda2[k];
    if (gamma < p.gamma_td) {
        const double a = p.gamma_t1 / p.gamma_td * l1 + l2;
        return -std::expm1(-a * gamma);
    }
    return -std::expm1(-(l1 * p.gamma_t1 + l2 * gamma));
}

double best_relay_cdf(const SchemeParams& p, double gamma) {
    p.validate();
    if (!(gamma >= 0.0)) throw std::invalid_argument("best_relay_cdf: gamma must be >= 0");
    const auto a = branch_rates(p);
    double prod = 1.0;
    for (double ai : a) prod *= -std::expm1(-ai * gamma);
    return prod;
}

double best_relay_cdf_expanded(const SchemeParams& p, double gamma) {
    p.validate();
    const int n = p.n();
    if (n > 24) throw std::invalid_argument("best_relay_cdf_expanded: n > 24 unsupported");
    const auto a = branch_rates(p);
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t b = 0; b < (1ull << n); ++b) {
        double c2 = 0.0;
        for (int i = 0; i < n; ++i) {
            if (b & (1ull << i)) c2 += a[static_cast<std::size_t>(i)];
        }
        const int sign = (std::popcount(b) & 1) ? -1 : 1;
        const double term = sign * std::exp(-c2 * gamma);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double hrs_cdf_asymptotic(const SchemeParams& p, double gamma) {
    p.validate();
    const int n = p.n();
    const auto a = branch_rates(p);
    double prod = p.lambdas.lambda0;
    for (double ai : a) prod *= ai;
    return std::pow(gamma, n + 1) / (n + 1) * prod;
}

double oracle_fer_numeric(const SchemeParams& p, double rel_tol) {
    p.validate();
    if (p.n() > 4) throw std::invalid_argument("oracle_fer_numeric: n <= 4 only");
    const auto a = branch_rates(p);
    const double l0 = p.lambdas.lambda0;
    const double gt = p.gamma_td;
    const auto integrand = [&](double u) {
        double prod = 1.0;
        for (double ai : a) prod *= -std::expm1(-ai * u);
        return l0 * std::exp(-l0 * (gt - u)) * prod;
    };
    return integrate_gauss_kronrod(integrand, 0.0, gt, {rel_tol, 60});
}

}  // namespace hrs
