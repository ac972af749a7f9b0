#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hrs/coding.hpp"
#include "hrs/special.hpp"

namespace hrs {

enum class ThresholdProvenance { closed_form, curve_calibrated, legacy };

std::string to_string(ThresholdProvenance p);
ThresholdProvenance provenance_from_string(const std::string& s);

struct ThresholdEntry {
    int d = 1;
    double gamma_t = 0.0;  // linear
    ThresholdProvenance provenance = ThresholdProvenance::closed_form;
    std::string source;  // curve id where applicable
};

struct ThresholdSet {
    std::vector<ThresholdEntry> entries;
    /// threshold for diversity order d; throws when absent
    double get(int d) const;
    bool has(int d) const;
};

/// SNR outage threshold for a diversity-d uncoded link with frame length
/// L and modulation constant c:
///   (d * integral_0^inf g^{d-1} * (1 - (1 - Q(sqrt(c g)))^L) dg)^(1/d).
/// Adaptive quadrature to rel_tol; throws on non-convergence.
double snr_threshold_uncoded(int d, int frame_len, double mod_const, double rel_tol = 1e-8);

/// Discrete counterpart on a uniform linear SNR grid:
///   (d * sum_i g_i^{d-1} * fer_i * dg)^(1/d).
/// Throws when the grid is not uniform in linear SNR.
double snr_threshold_from_curve(int d, const FerCurve& curve);

/// true when the curve spans the whole FER transition (close to 1 at the
/// low edge and close to 0 at the high edge)
bool curve_coverage_ok(const FerCurve& curve, double lo_fer = 0.95, double hi_fer = 0.02);

/// Pool-adjacent-violators fit of the measured FER values, non-increasing,
/// weighted by per-point frame counts. Suppresses Monte-Carlo jitter
/// before the threshold integral.
FerCurve regularize_monotone(const FerCurve& curve);

/// Resamples a (possibly dB-spaced) curve onto a uniform linear SNR grid
/// by monotone cubic interpolation, extending with FER 1 below the
/// measured range and 0 above. The grid spans (0, max snr] with n_points
/// points.
FerCurve resample_uniform_linear(const FerCurve& curve, std::size_t n_points = 4000);

/// Legacy minimum-absolute-error-sum threshold:
///   (integral_0^inf (1 - fer(g)) / g^2 dg)^(-1),
/// computed through the substitution t = 1/g on the documented domain
/// [1e-9, g_hi]. Meaningful when fer -> 1 as g -> 0; otherwise the value
/// is dominated by the lower cutoff.
double snr_threshold_legacy(const std::function<double(double)>& fer_fn,
                            double rel_tol = 1e-9);

/// Outage-style FER approximation: the SNR CDF evaluated at the threshold.
double fer_outage_approx(const std::function<double(double)>& cdf_at, double gamma_t);

/// Full coded calibration pipeline: measure the AWGN FER curve, apply the
/// monotone fit, resample to a uniform linear grid and integrate for every
/// requested diversity order.
struct CalibrationResult {
    FerCurve measured;
    FerCurve resampled;
    ThresholdSet thresholds;
    bool coverage_ok = true;
    bool budget_exhausted = false;  // some point hit max_frames first
};
CalibrationResult calibrate_code_thresholds(const ConvCode& code, int frame_len,
                                            const std::vector<int>& diversity_orders,
                                            const DbGrid& grid, const CalibrationBudget& budget,
                                            std::uint64_t seed, int shards = 64,
                                            int threads = 0);

}  // namespace hrs
