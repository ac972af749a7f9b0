#pragma once

#include <random>
#include <vector>

namespace hrs {

/// Two-phase relay network: one source-destination link plus n relays,
/// each with a source-relay and a relay-destination link. Gains are
/// average channel power gains (linear); avg_snr is the common transmit
/// SNR E/N0 (linear).
struct NetworkConfig {
    int n = 1;
    double omega0 = 1.0;
    std::vector<double> omega1;
    std::vector<double> omega2;
    double avg_snr = 1.0;

    void validate() const;
    static NetworkConfig symmetric(int n, double omega0, double omega1, double omega2,
                                   double avg_snr);
};

/// Per-link exponential rates 1/(avg_snr * omega).
struct Lambdas {
    double lambda0 = 0.0;
    std::vector<double> lambda1;
    std::vector<double> lambda2;
};

/// One block-fading draw: instantaneous SNR of every link.
struct FadingRealization {
    double gamma0 = 0.0;
    std::vector<double> gamma1;
    std::vector<double> gamma2;
};

Lambdas lambda_params(const NetworkConfig& cfg);

/// Draws all link SNRs independently; each is exponential with mean
/// avg_snr * omega of its link (the squared magnitude of a complex
/// Gaussian fade is exponential, so sampling stays in the SNR domain).
FadingRealization sample_realization(const NetworkConfig& cfg, std::mt19937_64& rng);

/// End-to-end SNR of an amplify-and-forward branch: g1*g2/(g1+g2+1).
double af_effective_snr(double gamma1, double gamma2);

/// min(g1, g2): the standard upper approximation of af_effective_snr.
double af_min_approx(double gamma1, double gamma2);

/// Combiner-output SNR for an n_paths-branch diversity receiver with n_t
/// transmit antennas: Gamma(shape n_paths, scale avg_snr/n_t), sampled
/// as a sum of independent exponentials (exact for integer shape).
double sample_mimo_combiner_snr(int n_t, int n_paths, double avg_snr, std::mt19937_64& rng);

}  // namespace hrs
