#include "hrs/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrs {

void NetworkConfig::validate() const {
    if (n < 1) throw std::invalid_argument("NetworkConfig: n must be >= 1");
    if (!(omega0 > 0.0)) throw std::invalid_argument("NetworkConfig: omega0 must be > 0");
    if (!(avg_snr > 0.0)) throw std::invalid_argument("NetworkConfig: avg_snr must be > 0");
    if (omega1.size() != static_cast<std::size_t>(n) ||
        omega2.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("NetworkConfig: gain list lengths must equal n");
    }
    for (double w : omega1)
        if (!(w > 0.0)) throw std::invalid_argument("NetworkConfig: omega1 entries must be > 0");
    for (double w : omega2)
        if (!(w > 0.0)) throw std::invalid_argument("NetworkConfig: omega2 entries must be > 0");
}

NetworkConfig NetworkConfig::symmetric(int n, double omega0, double omega1, double omega2,
                                       double avg_snr) {
    NetworkConfig cfg;
    cfg.n = n;
    cfg.omega0 = omega0;
    cfg.omega1.assign(static_cast<std::size_t>(n), omega1);
    cfg.omega2.assign(static_cast<std::size_t>(n), omega2);
    cfg.avg_snr = avg_snr;
    return cfg;
}

Lambdas lambda_params(const NetworkConfig& cfg) {
    cfg.validate();
    Lambdas l;
    l.lambda0 = 1.0 / (cfg.avg_snr * cfg.omega0);
    l.lambda1.resize(cfg.omega1.size());
    l.lambda2.resize(cfg.omega2.size());
    for (std::size_t i = 0; i < cfg.omega1.size(); ++i) {
        l.lambda1[i] = 1.0 / (cfg.avg_snr * cfg.omega1[i]);
        l.lambda2[i] = 1.0 / (cfg.avg_snr * cfg.omega2[i]);
    }
    return l;
}

FadingRealization sample_realization(const NetworkConfig& cfg, std::mt19937_64& rng) {
    FadingRealization r;
    r.gamma1.resize(cfg.omega1.size());
    r.gamma2.resize(cfg.omega2.size());
    std::exponential_distribution<double> unit(1.0);
    r.gamma0 = unit(rng) * cfg.avg_snr * cfg.omega0;
    for (std::size_t i = 0; i < cfg.omega1.size(); ++i) {
        r.gamma1[i] = unit(rng) * cfg.avg_snr * cfg.omega1[i];
    }
    for (std::size_t i = 0; i < cfg.omega2.size(); ++i) {
        r.gamma2[i] = unit(rng) * cfg.avg_snr * cfg.omega2[i];
    }
    return r;
}

double af_effective_snr(double gamma1, double gamma2) {
    if (gamma1 == 0.0 || gamma2 == 0.0) return 0.0;
    return gamma1 * gamma2 / (gamma1 + gamma2 + 1.0);
}

double af_min_approx(double gamma1, double gamma2) {
    return std::min(gamma1, gamma2);
}

double sample_mimo_combiner_snr(int n_t, int n_paths, double avg_snr, std::mt19937_64& rng) {
    if (n_t < 1 || n_paths < 1) {
        throw std::invalid_argument("sample_mimo_combiner_snr: antenna counts must be >= 1");
    }
    if (!(avg_snr > 0.0)) {
        throw std::invalid_argument("sample_mimo_combiner_snr: avg_snr must be > 0");
    }
    std::exponential_distribution<double> unit(1.0);
    const double scale = avg_snr / n_t;
    double sum = 0.0;
    for (int k = 0; k < n_paths; ++k) sum += unit(rng) * scale;
    return sum;
}

}  // namespace hrs
