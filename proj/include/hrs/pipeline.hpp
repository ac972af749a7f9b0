#pragma once

#include <optional>

#include "hrs/analysis.hpp"
#include "hrs/scenario.hpp"
#include "hrs/threshold.hpp"

namespace hrs {

/// Calibration grid matched to the FER transition of the built-in codes
/// (wider fallback for user codes).
DbGrid default_calibration_grid(const ConvCode& code, int frame_len);

/// Thresholds for the scenario's modem/codec family, diversity orders
/// 1..n+1: closed form for uncoded scenarios, curve calibration for coded
/// ones (expensive). For the diversity baseline the orders are 1..n.
ThresholdSet thresholds_for_scenario(const Scenario& sc,
                                     std::optional<CalibrationBudget> budget = {},
                                     int threads = 0);

/// Analytical params for one scheme at one average SNR. The selection
/// CDF machinery covers all three relay schemes through the branch rate:
/// hybrid uses gamma_t1, all-AF the combined rate (gamma_t1 = gamma_td),
/// ideal-DF the relay-destination rate alone (gamma_t1 -> 0).
SchemeParams scheme_analysis_params(Scheme scheme, const NetworkConfig& cfg, double gamma_t1,
                                    double gamma_td);

/// Analytical + high-SNR FER across the scenario grid.
std::vector<FerPoint> analyze_scenario(const Scenario& sc, const ThresholdSet& thresholds);

/// Outage-model FER of the diversity baseline at one average SNR.
double mimo_fer_model(int n_t, int n_paths, double avg_snr, double gamma_t);
/// High-SNR bound of the same model.
double mimo_fer_asymptotic(int n_t, int n_paths, double avg_snr, double gamma_t);

}  // namespace hrs
