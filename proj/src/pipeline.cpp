#include "hrs/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "hrs/special.hpp"

namespace hrs {

DbGrid default_calibration_grid(const ConvCode& code, int frame_len) {
    if (code.k_in() == 1 && code.n_out() == 2) {
        return frame_len <= 100 ? DbGrid{-6.0, 4.5, 0.25} : DbGrid{-5.0, 5.0, 0.25};
    }
    if (code.k_in() == 2 && code.n_out() == 3) {
        return frame_len <= 100 ? DbGrid{-4.5, 4.5, 0.25} : DbGrid{-4.0, 5.0, 0.25};
    }
    return DbGrid{-8.0, 6.0, 0.25};
}

ThresholdSet thresholds_for_scenario(const Scenario& sc, std::optional<CalibrationBudget> budget,
                                     int threads) {
    sc.validate();
    const int d_max = sc.scheme == Scheme::mimo ? sc.n : sc.n + 1;
    std::vector<int> orders;
    for (int d = 1; d <= d_max; ++d) orders.push_back(d);

    if (!sc.coding.code) {
        ThresholdSet set;
        for (int d : orders) {
            ThresholdEntry e;
            e.d = d;
            e.gamma_t = snr_threshold_uncoded(d, sc.frame_len, sc.coding.mod_const);
            e.provenance = ThresholdProvenance::closed_form;
            set.entries.push_back(e);
        }
        return set;
    }
    const CalibrationBudget b = budget.value_or(CalibrationBudget{});
    const DbGrid grid = default_calibration_grid(*sc.coding.code, sc.frame_len);
    const auto result = calibrate_code_thresholds(*sc.coding.code, sc.frame_len, orders, grid, b,
                                                  sc.seed ^ 0x7472657368ULL, sc.shards, threads);
    return result.thresholds;
}

SchemeParams scheme_analysis_params(Scheme scheme, const NetworkConfig& cfg, double gamma_t1,
                                    double gamma_td) {
    double t1 = gamma_t1;
    switch (scheme) {
        case Scheme::hrs:
            break;
        case Scheme::afrs:
            t1 = gamma_td;  // combined source-relay-destination rate
            break;
        case Scheme::pdfrs:
            t1 = gamma_td * 1e-12;  // relay always decodes; branch rate -> lambda2
            break;
        case Scheme::mimo:
            throw std::invalid_argument("scheme_analysis_params: no relay params for mimo");
    }
    return scheme_params(cfg, t1, gamma_td);
}

double mimo_fer_model(int n_t, int n_paths, double avg_snr, double gamma_t) {
    return gamma_cdf_integer_shape(n_paths, gamma_t * n_t / avg_snr);
}

double mimo_fer_asymptotic(int n_t, int n_paths, double avg_snr, double gamma_t) {
    double v = 1.0;
    for (int k = 1; k <= n_paths; ++k) v *= gamma_t * n_t / avg_snr / k;
    return v;
}

std::vector<FerPoint> analyze_scenario(const Scenario& sc, const ThresholdSet& thresholds) {
    sc.validate();
    std::vector<FerPoint> out;
    const auto grid_db = sc.grid.points();
    out.reserve(grid_db.size());

    if (sc.scheme == Scheme::mimo) {
        const double gt = thresholds.get(sc.n);
        for (double db : grid_db) {
            const double avg = std::pow(10.0, db / 10.0);
            FerPoint p;
            p.avg_snr_db = db;
            p.scheme = to_string(sc.scheme);
            p.fer_analytical = mimo_fer_model(sc.mimo_nt, sc.n, avg, gt);
            p.fer_asymptotic = mimo_fer_asymptotic(sc.mimo_nt, sc.n, avg, gt);
            p.asymptotic_valid = p.fer_asymptotic <= 1.0;
            out.push_back(p);
        }
        return out;
    }

    const double gt1 = thresholds.get(1);
    const double gtd = thresholds.get(sc.n + 1);
    for (double db : grid_db) {
        const double avg = std::pow(10.0, db / 10.0);
        const NetworkConfig cfg = sc.network_at(avg);
        const SchemeParams p = scheme_analysis_params(sc.scheme, cfg, gt1, gtd);
        FerPoint fp;
        fp.avg_snr_db = db;
        fp.scheme = to_string(sc.scheme);
        fp.fer_analytical = hrs_fer_analytical(p);
        switch (sc.scheme) {
            case Scheme::hrs: fp.fer_asymptotic = hrs_fer_asymptotic(p); break;
            case Scheme::afrs: fp.fer_asymptotic = afrs_fer(p); break;
            case Scheme::pdfrs: fp.fer_asymptotic = pdfrs_fer(p); break;
            case Scheme::mimo: break;
        }
        fp.asymptotic_valid = fp.fer_asymptotic <= 1.0;
        out.push_back(fp);
    }
    return out;
}

}  // namespace hrs
