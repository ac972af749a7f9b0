#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hrs/montecarlo.hpp"

namespace hrs {

/// Feedforward convolutional code with k_in input bits and n_out output
/// bits per step, built from an octal generator matrix (row per input,
/// column per output).
///
/// Octal convention: each generator's binary expansion is read with the
/// most significant bit acting on the current input bit and lower bits on
/// progressively older bits, so 5 -> 101 -> u[k] ^ u[k-2] and
/// 7 -> 111 -> u[k] ^ u[k-1] ^ u[k-2]. A zero generator contributes
/// nothing. Encoding starts from the all-zero state and appends zero-tail
/// steps to return there.
class ConvCode {
public:
    static ConvCode from_octal(const std::vector<std::vector<unsigned>>& gen_octal);
    /// (5,7): rate 1/2, 4 states.
    static ConvCode rate_half_k3();
    /// (23,35,0; 0,5,13): rate 2/3, two inputs, 128 states.
    static ConvCode rate_two_thirds();

    int k_in() const { return k_in_; }
    int n_out() const { return n_out_; }
    int tail_steps() const { return tail_steps_; }
    int n_states() const { return n_states_; }
    const std::vector<int>& memory() const { return memory_; }
    const std::string& id() const { return id_; }

    /// Coded bits for one frame; length (L/k_in + tail_steps) * n_out.
    /// Throws when the frame length is not divisible by k_in.
    std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& info) const;

    /// Maximum-likelihood sequence decision under squared-Euclidean branch
    /// metrics on the zero-tail terminated trellis; ties go to the lower
    /// predecessor state index. Returns the information bits.
    std::vector<std::uint8_t> viterbi_decode(const std::vector<double>& received) const;

private:
    int k_in_ = 0, n_out_ = 0, tail_steps_ = 0, n_states_ = 0, n_inputs_ = 0;
    std::vector<int> memory_;
    std::vector<std::vector<unsigned>> gen_octal_;
    std::string id_;
    // flat [state * n_inputs + input] tables
    std::vector<std::uint16_t> next_state_;
    std::vector<std::uint8_t> out_pattern_;
};

/// Maps bits to +-1 (0 -> +1) and adds white Gaussian noise with variance
/// 1/(2*snr) per sample, so the per-transmitted-bit SNR equals `snr`.
/// snr = +infinity yields the noiseless sequence.
std::vector<double> bpsk_awgn(const std::vector<std::uint8_t>& bits, double snr,
                              std::mt19937_64& rng);

/// Frame error probability of uncoded coherent linear modulation over
/// AWGN: 1 - (1 - Q(sqrt(c*snr)))^L, with c = 2 for BPSK.
double uncoded_awgn_fer(double snr, int frame_len, double mod_const);

/// Sampled instantaneous-FER-vs-SNR curve. `snr` is linear and ascending;
/// frames/errors hold the per-point trial counts for measured curves and
/// are empty for synthesized or resampled curves.
struct FerCurve {
    std::vector<double> snr;
    std::vector<double> fer;
    std::vector<std::uint64_t> frames;
    std::vector<std::uint64_t> errors;
    std::string code_id;
    int frame_len = 0;
    std::uint64_t budget_min_errors = 0;
    std::uint64_t budget_max_frames = 0;

    std::size_t size() const { return snr.size(); }
    bool uniform_linear(double rel_tol = 1e-6) const;
    /// true when the point did not reach the error target before the
    /// frame cap (wider confidence, flagged downstream)
    bool point_exhausted(std::size_t i) const;
};

struct DbGrid {
    double start_db = 0.0;
    double stop_db = 30.0;
    double step_db = 2.5;
    std::vector<double> points() const;
};

struct CalibrationBudget {
    std::uint64_t min_errors = 100;
    std::uint64_t max_frames = 1'000'000;
};

/// Measures the AWGN frame error rate of encode -> BPSK -> Viterbi over a
/// dB grid by seeded Monte-Carlo. Frames are sharded across `shards`
/// substreams; results are bit-identical for fixed (seed, shards)
/// regardless of `threads` (0 = all cores).
FerCurve measure_awgn_fer_curve(const ConvCode& code, int frame_len, const DbGrid& grid,
                                const CalibrationBudget& budget, std::uint64_t seed,
                                int shards = 64, int threads = 0);

}  // namespace hrs
