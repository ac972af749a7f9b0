#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hrs/analysis.hpp"
#include "hrs/coding.hpp"
#include "hrs/simulator.hpp"
#include "hrs/threshold.hpp"

namespace hrs {

// CSV schemas (documented in the README):
//   FerCurve:      snr_linear,fer,frames,errors
//   ThresholdSet:  d,gamma_t_linear,gamma_t_db,provenance
//   SimResult:     snr_db,scheme,frames,errors,fer,ci_low,ci_high
//   FerPoint:      snr_db,fer_analytical,fer_asymptotic,scheme
// Values use full double precision; missing cells are empty.

void write_fer_curve_csv(const std::string& path, const FerCurve& curve);
FerCurve read_fer_curve_csv(const std::string& path);

void write_threshold_csv(const std::string& path, const ThresholdSet& set);
ThresholdSet read_threshold_csv(const std::string& path);

void write_sim_csv(const std::string& path, const std::vector<SimPoint>& points, Scheme scheme);
struct SimSeries {
    std::string scheme;
    std::vector<SimPoint> points;
};
std::vector<SimSeries> read_sim_csv(const std::string& path);

void write_fer_points_csv(const std::string& path, const std::vector<FerPoint>& points);
std::vector<FerPoint> read_fer_points_csv(const std::string& path);

/// Joined per-SNR comparison of a simulated series against analytical
/// values; columns missing from the inputs stay NaN.
struct ComparisonRow {
    double snr_db = 0.0;
    double fer_sim = std::numeric_limits<double>::quiet_NaN();
    double ci_lo = std::numeric_limits<double>::quiet_NaN();
    double ci_hi = std::numeric_limits<double>::quiet_NaN();
    double fer_analytical = std::numeric_limits<double>::quiet_NaN();
    double fer_asymptotic = std::numeric_limits<double>::quiet_NaN();
    double fer_legacy = std::numeric_limits<double>::quiet_NaN();
    double rel_err_analytical = std::numeric_limits<double>::quiet_NaN();
    double rel_err_asymptotic = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t errors = 0;
};

/// Joins on snr_db (exact to 1e-9 dB); throws when the grids differ.
std::vector<ComparisonRow> make_comparison(const std::vector<SimPoint>& sim,
                                           const std::vector<FerPoint>& analysis);

void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows);

}  // namespace hrs
