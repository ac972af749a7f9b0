#pragma once

#include <string>
#include <vector>

#include "hrs/channel.hpp"

namespace hrs {

/// Inputs of the closed-form FER expressions: the per-link exponential
/// rates plus the relay-decode threshold (diversity order 1) and the
/// destination threshold (diversity order n+1).
struct SchemeParams {
    Lambdas lambdas;
    double gamma_t1 = 0.0;
    double gamma_td = 0.0;

    int n() const { return static_cast<int>(lambdas.lambda1.size()); }
    void validate() const;
};

/// CDF of the combined (direct + best-relay) SNR at gamma, evaluated from
/// the 2^n - 1 subset terms with compensated summation; the coincident
/// rate case (subset rate == lambda0) is handled by the analytic limit.
/// n is capped at 24.
double hrs_cdf(const SchemeParams& p, double gamma);

/// Average FER of hybrid relay selection: hrs_cdf at the destination
/// threshold.
double hrs_fer_analytical(const SchemeParams& p);

/// High-SNR FER of hybrid relay selection:
///   gamma_td^{n+1}/(n+1) * lambda0 * prod_i lambda2_i (1 + r * lambda1_i/lambda2_i)
/// with r = gamma_t1/gamma_td. May exceed 1 outside its validity range.
double hrs_fer_asymptotic(const SchemeParams& p);

/// High-SNR FER of relay selection with ideal decode-and-forward relays.
double pdfrs_fer(const SchemeParams& p);

/// High-SNR FER of all-amplify-and-forward relay selection (combined
/// Rayleigh rate lambda1 + lambda2 per branch).
double afrs_fer(const SchemeParams& p);

/// FER ratio afrs_fer / hrs_fer_asymptotic in product form.
double hrs_gain_over_afrs(const SchemeParams& p);

/// Piecewise single-branch SNR CDF: the broadened exponential below the
/// destination threshold, the exact decode-region form above it.
double relay_branch_cdf(const SchemeParams& p, int i, double gamma);

/// CDF of the best-relay SNR below the destination threshold, product
/// form.
double best_relay_cdf(const SchemeParams& p, double gamma);

/// Same CDF through the binomial subset expansion; equal to the product
/// form up to round-off.
double best_relay_cdf_expanded(const SchemeParams& p, double gamma);

/// High-SNR limit of hrs_cdf: lambda0 * gamma^{n+1}/(n+1) * prod_i a_i.
double hrs_cdf_asymptotic(const SchemeParams& p, double gamma);

/// Independent validation oracle: Pr(gamma0 + best relay < gamma_td) by
/// direct numerical convolution of the exponential density with the
/// product-form CDF (no subset expansion, no coincident-rate branch).
/// Restricted to n <= 4.
double oracle_fer_numeric(const SchemeParams& p, double rel_tol = 1e-8);

/// One analytical sweep point.
struct FerPoint {
    double avg_snr_db = 0.0;
    double fer_analytical = 0.0;
    double fer_asymptotic = 0.0;
    std::string scheme;
    bool asymptotic_valid = true;  // false when the high-SNR value exceeds 1
};

/// Builds SchemeParams for a network at one average SNR from calibrated
/// thresholds.
SchemeParams scheme_params(const NetworkConfig& cfg, double gamma_t1, double gamma_td);

}  // namespace hrs
