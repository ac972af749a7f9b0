#include "hrs/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hrs/isotonic.hpp"
#include "hrs/quadrature.hpp"

namespace hrs {

std::string to_string(ThresholdProvenance p) {
    switch (p) {
        case ThresholdProvenance::closed_form: return "closed-form";
        case ThresholdProvenance::curve_calibrated: return "curve-calibrated";
        case ThresholdProvenance::legacy: return "legacy";
    }
    return "unknown";
}

ThresholdProvenance provenance_from_string(const std::string& s) {
    if (s == "closed-form") return ThresholdProvenance::closed_form;
    if (s == "curve-calibrated") return ThresholdProvenance::curve_calibrated;
    if (s == "legacy") return ThresholdProvenance::legacy;
    throw std::invalid_argument("unknown threshold provenance: " + s);
}

double ThresholdSet::get(int d) const {
    for (const auto& e : entries) {
        if (e.d == d) return e.gamma_t;
    }
    throw std::invalid_argument("ThresholdSet: no entry for d=" + std::to_string(d));
}

bool ThresholdSet::has(int d) const {
    for (const auto& e : entries) {
        if (e.d == d) return true;
    }
    return false;
}

double snr_threshold_uncoded(int d, int frame_len, double mod_const, double rel_tol) {
    if (d < 1) throw std::invalid_argument("snr_threshold_uncoded: d must be >= 1");
    if (frame_len < 1) throw std::invalid_argument("snr_threshold_uncoded: L must be >= 1");
    if (!(mod_const > 0.0)) throw std::invalid_argument("snr_threshold_uncoded: c must be > 0");

    // The integrand decays like g^{d-1} * L * exp(-c g / 2); walk the upper
    // limit out until the bound is negligible against the accumulated mass.
    double hi = 8.0;
    const auto tail_bound = [&](double g) {
        return std::pow(g, d - 1) * frame_len * 0.5 * std::exp(-0.5 * mod_const * g);
    };
    while (tail_bound(hi) > 1e-18 && hi < 1e6) hi *= 2.0;

    const auto integrand = [&](double g) {
        return std::pow(g, d - 1) * uncoded_awgn_fer(g, frame_len, mod_const);
    };
    const double integral = integrate_simpson(integrand, 0.0, hi, {rel_tol, 60});
    return std::pow(d * integral, 1.0 / d);
}

double snr_threshold_from_curve(int d, const FerCurve& curve) {
    if (d < 1) throw std::invalid_argument("snr_threshold_from_curve: d must be >= 1");
    if (curve.size() < 2) throw std::invalid_argument("snr_threshold_from_curve: curve too small");
    if (!curve.uniform_linear()) {
        throw std::invalid_argument(
            "snr_threshold_from_curve: grid not uniform in linear SNR (resample first)");
    }
    const double dg = curve.snr[1] - curve.snr[0];
    double sum = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        sum += std::pow(curve.snr[i], d - 1) * curve.fer[i];
    }
    return std::pow(d * sum * dg, 1.0 / d);
}

bool curve_coverage_ok(const FerCurve& curve, double lo_fer, double hi_fer) {
    if (curve.size() < 2) return false;
    return curve.fer.front() >= lo_fer && curve.fer.back() <= hi_fer;
}

FerCurve regularize_monotone(const FerCurve& curve) {
    FerCurve out = curve;
    std::vector<double> w;
    if (curve.frames.size() == curve.size()) {
        w.reserve(curve.size());
        for (auto f : curve.frames) w.push_back(static_cast<double>(f));
    }
    out.fer = isotonic_non_increasing(curve.fer, w);
    for (auto& v : out.fer) v = std::clamp(v, 0.0, 1.0);
    return out;
}

namespace {

// Fritsch-Carlson monotone cubic interpolant tangents.
std::vector<double> pchip_tangents(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), delta(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // clamp endpoint tangents to preserve monotonicity
    for (std::size_t i : {std::size_t{0}, n - 1}) {
        const double d = (i == 0) ? delta[0] : delta[n - 2];
        if (d == 0.0) {
            m[i] = 0.0;
        } else if (m[i] / d < 0.0) {
            m[i] = 0.0;
        } else if (std::abs(m[i]) > 3.0 * std::abs(d)) {
            m[i] = 3.0 * d;
        }
    }
    return m;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& m, double q) {
    if (q <= x.front()) return y.front();
    if (q >= x.back()) return y.back();
    std::size_t i = static_cast<std::size_t>(
        std::upper_bound(x.begin(), x.end(), q) - x.begin()) - 1;
    const double h = x[i + 1] - x[i];
    const double t = (q - x[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y[i] + h10 * h * m[i] + h01 * y[i + 1] + h11 * h * m[i + 1];
}

}  // namespace

FerCurve resample_uniform_linear(const FerCurve& curve, std::size_t n_points) {
    if (curve.size() < 2) throw std::invalid_argument("resample_uniform_linear: curve too small");
    if (n_points < 16) throw std::invalid_argument("resample_uniform_linear: too few points");
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (!(curve.snr[i] > curve.snr[i - 1])) {
            throw std::invalid_argument("resample_uniform_linear: grid must be increasing");
        }
    }
    const auto m = pchip_tangents(curve.snr, curve.fer);
    const double hi = curve.snr.back();
    const double lo = curve.snr.front();
    const double step = hi / static_cast<double>(n_points);

    FerCurve out;
    out.code_id = curve.code_id;
    out.frame_len = curve.frame_len;
    out.snr.reserve(n_points);
    out.fer.reserve(n_points);
    for (std::size_t i = 1; i <= n_points; ++i) {
        const double g = step * static_cast<double>(i);
        double v;
        if (g < lo) {
            v = 1.0;  // below the measured range the frame is presumed lost
        } else {
            v = std::clamp(pchip_eval(curve.snr, curve.fer, m, g), 0.0, 1.0);
        }
        out.snr.push_back(g);
        out.fer.push_back(v);
    }
    return out;
}

double snr_threshold_legacy(const std::function<double(double)>& fer_fn, double rel_tol) {
    // integral (1 - fer(g))/g^2 dg rewritten with t = 1/g: a bounded
    // integrand 1 - fer(1/t) on (0, t_hi]. On [0, t_lo] (g >= g_hi) the
    // fer is negligible by construction and the integrand contributes
    // t_lo exactly. The upper cutoff corresponds to g = 1e-9; curves that
    // do not reach FER 1 at small g are dominated by it.
    const auto integrand = [&](double t) { return 1.0 - fer_fn(1.0 / t); };

    double g_hi = 8.0;
    while (fer_fn(g_hi) > 1e-18 && g_hi < 1e9) g_hi *= 2.0;
    const double t_lo = 1.0 / g_hi;
    const double t_hi = 1e9;

    // split: the integrand is ~0 on [t_knee, t_hi] once fer -> 1
    double t_knee = t_lo * 2.0;
    while (t_knee < t_hi && integrand(t_knee) > 1e-18) t_knee *= 2.0;
    double integral = t_lo;
    integral += integrate_simpson(integrand, t_lo, std::min(t_knee, t_hi), {rel_tol, 60});
    if (t_knee < t_hi) {
        integral += integrate_simpson(integrand, t_knee, t_hi, {1e-6, 60});
    }
    if (!(integral > 0.0)) {
        throw std::runtime_error("snr_threshold_legacy: integral did not converge to > 0");
    }
    return 1.0 / integral;
}

double fer_outage_approx(const std::function<double(double)>& cdf_at, double gamma_t) {
    return cdf_at(gamma_t);
}

CalibrationResult calibrate_code_thresholds(const ConvCode& code, int frame_len,
                                            const std::vector<int>& diversity_orders,
                                            const DbGrid& grid, const CalibrationBudget& budget,
                                            std::uint64_t seed, int shards, int threads) {
    CalibrationResult res;
    res.measured = measure_awgn_fer_curve(code, frame_len, grid, budget, seed, shards, threads);
    for (std::size_t i = 0; i < res.measured.size(); ++i) {
        if (res.measured.point_exhausted(i)) res.budget_exhausted = true;
    }
    const FerCurve smooth = regularize_monotone(res.measured);
    res.coverage_ok = curve_coverage_ok(smooth);
    res.resampled = resample_uniform_linear(smooth);
    for (int d : diversity_orders) {
        ThresholdEntry e;
        e.d = d;
        e.gamma_t = snr_threshold_from_curve(d, res.resampled);
        e.provenance = ThresholdProvenance::curve_calibrated;
        e.source = res.measured.code_id + "_L" + std::to_string(frame_len);
        res.thresholds.entries.push_back(e);
    }
    return res;
}

}  // namespace hrs
