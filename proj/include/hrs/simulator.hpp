#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrs/channel.hpp"
#include "hrs/coding.hpp"
#include "hrs/montecarlo.hpp"

namespace hrs {

enum class Scheme { hrs, afrs, pdfrs, mimo };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Frame-level transmission model shared by all schemes. Without a code,
/// frame errors are drawn Bernoulli from the closed-form AWGN FER at the
/// realized SNR (distribution-identical to simulating the L BPSK bits and
/// ~100x faster); bit_exact_uncoded switches to the explicit per-bit
/// simulation. With a code, every decode is a full encode/BPSK/AWGN/
/// Viterbi round trip.
struct CodingConfig {
    std::optional<ConvCode> code;
    bool bit_exact_uncoded = false;
    /// relay decode verdicts from an appended CRC-16/CCITT instead of the
    /// default genie comparison (coded frames only; off by default)
    bool crc_relay_check = false;
    double mod_const = 2.0;  // BPSK
};

/// Simulates one two-phase frame: broadcast, per-relay decode verdict,
/// relay grouping (decode-and-forward when correct, amplify-and-forward
/// otherwise), max-SNR selection with lowest-index tie-break, maximal
/// ratio combining with the direct link, destination decode. Returns true
/// on frame error.
bool simulate_hrs_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                        std::mt19937_64& rng);

/// All relays amplify-and-forward; selection and combining as in HRS.
bool simulate_afrs_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                         std::mt19937_64& rng);

/// All relays decode correctly by assumption (branch SNR is the
/// relay-destination SNR); selection and combining as in HRS.
bool simulate_pdfrs_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                          std::mt19937_64& rng);

/// Diversity baseline: combiner SNR drawn from the n_paths-branch
/// distribution, then the same destination decode as HRS.
bool simulate_mimo_frame(int n_t, int n_paths, double avg_snr, const CodingConfig& coding,
                         int frame_len, std::mt19937_64& rng);

/// One scenario: a scheme plus its network family swept over average SNR.
struct Scenario {
    std::string name = "custom";
    Scheme scheme = Scheme::hrs;
    int n = 1;        // relay count; receive antennas for mimo
    int mimo_nt = 1;  // transmit antennas (mimo only)
    double omega0 = 1.0;
    std::vector<double> omega1;  // length n (broadcast from scalar at load)
    std::vector<double> omega2;
    int frame_len = 100;
    CodingConfig coding;
    DbGrid grid;
    mc::StopRule stop{200, 2'000'000};
    std::uint64_t seed = 1;
    int shards = 64;
    int threads = 0;  // 0 = all cores / HRSSIM_THREADS

    void validate() const;
    NetworkConfig network_at(double avg_snr) const;
};

/// One measured FER point of a campaign.
struct SimPoint {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t errors = 0;
    double fer = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
    bool exhausted = false;
    double seconds = 0.0;
};

/// Runs the scenario over its SNR grid, sharding frames across substreams.
/// Totals are reproducible for fixed (seed, shards) at any thread count.
std::vector<SimPoint> run_campaign(const Scenario& sc, int threads_override = -1);

/// Serial reference driver (no OpenMP); identical output to run_campaign.
std::vector<SimPoint> run_campaign_serial(const Scenario& sc);

/// CRC-16/CCITT (poly 0x1021, init 0xFFFF) over a bit sequence, MSB
/// first. Used by the optional relay CRC mode.
std::uint16_t crc16_ccitt(const std::vector<std::uint8_t>& bits);

}  // namespace hrs
