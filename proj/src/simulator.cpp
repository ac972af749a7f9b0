#include "hrs/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hrs/stats.hpp"

namespace hrs {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::hrs: return "hrs";
        case Scheme::afrs: return "af-rs";
        case Scheme::pdfrs: return "pdf-rs";
        case Scheme::mimo: return "mimo";
    }
    return "unknown";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "hrs") return Scheme::hrs;
    if (s == "af-rs" || s == "afrs") return Scheme::afrs;
    if (s == "pdf-rs" || s == "pdfrs") return Scheme::pdfrs;
    if (s == "mimo") return Scheme::mimo;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::uint16_t crc16_ccitt(const std::vector<std::uint8_t>& bits) {
    std::uint16_t crc = 0xffff;
    for (std::uint8_t b : bits) {
        const std::uint16_t in = static_cast<std::uint16_t>(b & 1u);
        const std::uint16_t msb = static_cast<std::uint16_t>((crc >> 15) ^ in);
        crc = static_cast<std::uint16_t>(crc << 1);
        if (msb) crc ^= 0x1021;
    }
    return crc;
}

namespace {

struct FrameWork {
    std::vector<std::uint8_t> info;
    std::vector<std::uint8_t> coded;

    void make_frame(int frame_len, bool with_crc, std::mt19937_64& rng) {
        info.resize(static_cast<std::size_t>(frame_len));
        const std::size_t payload = with_crc && frame_len > 16
                                        ? static_cast<std::size_t>(frame_len) - 16
                                        : info.size();
        for (std::size_t i = 0; i < payload; ++i) info[i] = static_cast<std::uint8_t>(rng() & 1u);
        if (payload < info.size()) {
            std::vector<std::uint8_t> head(info.begin(), info.begin() + payload);
            const std::uint16_t crc = crc16_ccitt(head);
            for (int k = 0; k < 16; ++k) {
                info[payload + static_cast<std::size_t>(k)] =
                    static_cast<std::uint8_t>((crc >> (15 - k)) & 1u);
            }
        }
    }
};

// decode verdict of one coded transmission at instantaneous SNR `snr`
bool coded_transmission_ok(const ConvCode& code, const FrameWork& w, double snr, bool crc_check,
                           std::mt19937_64& rng) {
    const auto rx = bpsk_awgn(w.coded, snr, rng);
    const auto decoded = code.viterbi_decode(rx);
    if (!crc_check) return decoded == w.info;
    if (decoded.size() <= 16) return decoded == w.info;
    std::vector<std::uint8_t> head(decoded.begin(), decoded.end() - 16);
    const std::uint16_t crc = crc16_ccitt(head);
    for (int k = 0; k < 16; ++k) {
        if (decoded[decoded.size() - 16 + static_cast<std::size_t>(k)] !=
            ((crc >> (15 - k)) & 1u)) {
            return false;
        }
    }
    return true;
}

// uncoded frame decision at instantaneous SNR
bool uncoded_frame_error(double snr, int frame_len, const CodingConfig& coding,
                         std::mt19937_64& rng) {
    if (coding.bit_exact_uncoded) {
        const double sigma = std::isinf(snr) ? 0.0 : std::sqrt(1.0 / (coding.mod_const * snr));
        std::normal_distribution<double> noise(0.0, 1.0);
        for (int i = 0; i < frame_len; ++i) {
            if (1.0 + sigma * noise(rng) < 0.0) return true;
        }
        return false;
    }
    const double p = uncoded_awgn_fer(snr, frame_len, coding.mod_const);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng) < p;
}

enum class RelayMode { hybrid, all_af, all_df };

bool relay_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                 RelayMode mode, std::mt19937_64& rng) {
    const FadingRealization fade = sample_realization(cfg, rng);

    FrameWork w;
    if (coding.code) {
        w.make_frame(frame_len, coding.crc_relay_check, rng);
        w.coded = coding.code->encode(w.info);
    }

    // branch SNRs after relay processing
    double best = -1.0;
    for (int i = 0; i < cfg.n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        bool decoded_ok = false;
        switch (mode) {
            case RelayMode::all_df:
                decoded_ok = true;
                break;
            case RelayMode::all_af:
                decoded_ok = false;
                break;
            case RelayMode::hybrid:
                if (coding.code) {
                    decoded_ok = coded_transmission_ok(*coding.code, w, fade.gamma1[k],
                                                       coding.crc_relay_check, rng);
                } else {
                    decoded_ok = !uncoded_frame_error(fade.gamma1[k], frame_len, coding, rng);
                }
                break;
        }
        const double snr_i = decoded_ok ? fade.gamma2[k]
                                        : af_effective_snr(fade.gamma1[k], fade.gamma2[k]);
        if (snr_i > best) best = snr_i;  // strict > keeps the lowest index on ties
    }

    const double snr_mrc = fade.gamma0 + best;
    if (coding.code) {
        return !coded_transmission_ok(*coding.code, w, snr_mrc, false, rng);
    }
    return uncoded_frame_error(snr_mrc, frame_len, coding, rng);
}

}  // namespace

bool simulate_hrs_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                        std::mt19937_64& rng) {
    return relay_frame(cfg, coding, frame_len, RelayMode::hybrid, rng);
}

bool simulate_afrs_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                         std::mt19937_64& rng) {
    return relay_frame(cfg, coding, frame_len, RelayMode::all_af, rng);
}

bool simulate_pdfrs_frame(const NetworkConfig& cfg, const CodingConfig& coding, int frame_len,
                          std::mt19937_64& rng) {
    return relay_frame(cfg, coding, frame_len, RelayMode::all_df, rng);
}

bool simulate_mimo_frame(int n_t, int n_paths, double avg_snr, const CodingConfig& coding,
                         int frame_len, std::mt19937_64& rng) {
    const double snr = sample_mimo_combiner_snr(n_t, n_paths, avg_snr, rng);
    if (coding.code) {
        FrameWork w;
        w.make_frame(frame_len, false, rng);
        w.coded = coding.code->encode(w.info);
        return !coded_transmission_ok(*coding.code, w, snr, false, rng);
    }
    return uncoded_frame_error(snr, frame_len, coding, rng);
}

void Scenario::validate() const {
    if (frame_len < 1) throw std::invalid_argument("Scenario: frame_len must be >= 1");
    if (stop.min_errors == 0 || stop.max_frames == 0) {
        throw std::invalid_argument("Scenario: stop rule must be positive");
    }
    if (shards < 1) throw std::invalid_argument("Scenario: shards must be >= 1");
    if (scheme == Scheme::mimo) {
        if (n < 1 || mimo_nt < 1) throw std::invalid_argument("Scenario: antenna counts >= 1");
    } else {
        network_at(1.0).validate();
    }
    grid.points();  // validates the grid
    if (coding.code && frame_len % coding.code->k_in() != 0) {
        throw std::invalid_argument("Scenario: frame_len not divisible by code k_in");
    }
}

NetworkConfig Scenario::network_at(double avg_snr) const {
    NetworkConfig cfg;
    cfg.n = n;
    cfg.omega0 = omega0;
    cfg.omega1 = omega1;
    cfg.omega2 = omega2;
    if (cfg.omega1.size() == 1 && n > 1) cfg.omega1.assign(static_cast<std::size_t>(n), omega1[0]);
    if (cfg.omega2.size() == 1 && n > 1) cfg.omega2.assign(static_cast<std::size_t>(n), omega2[0]);
    cfg.avg_snr = avg_snr;
    return cfg;
}

namespace {

int env_default_threads() {
    if (const char* v = std::getenv("HRSSIM_THREADS")) {
        const int t = std::atoi(v);
        if (t > 0) return t;
    }
    return 0;  // library default: all cores
}

std::vector<SimPoint> run_campaign_impl(const Scenario& sc, int threads, bool serial) {
    sc.validate();
    const auto db_points = sc.grid.points();
    std::vector<SimPoint> out;
    out.reserve(db_points.size());
    const mc::StopRule stop = sc.stop;

    for (std::size_t pi = 0; pi < db_points.size(); ++pi) {
        const double avg_snr = std::pow(10.0, db_points[pi] / 10.0);
        const NetworkConfig cfg =
            sc.scheme == Scheme::mimo ? NetworkConfig{} : sc.network_at(avg_snr);

        const auto kernel = [&](std::mt19937_64& rng, std::uint64_t cnt) {
            std::uint64_t errs = 0;
            for (std::uint64_t k = 0; k < cnt; ++k) {
                bool err = false;
                switch (sc.scheme) {
                    case Scheme::hrs:
                        err = simulate_hrs_frame(cfg, sc.coding, sc.frame_len, rng);
                        break;
                    case Scheme::afrs:
                        err = simulate_afrs_frame(cfg, sc.coding, sc.frame_len, rng);
                        break;
                    case Scheme::pdfrs:
                        err = simulate_pdfrs_frame(cfg, sc.coding, sc.frame_len, rng);
                        break;
                    case Scheme::mimo:
                        err = simulate_mimo_frame(sc.mimo_nt, sc.n, avg_snr, sc.coding,
                                                  sc.frame_len, rng);
                        break;
                }
                if (err) ++errs;
            }
            return errs;
        };

        const auto t0 = std::chrono::steady_clock::now();
        const mc::TrialStats st =
            serial ? mc::run_trials_serial(kernel, stop, sc.seed, pi, sc.shards)
                   : mc::run_trials(kernel, stop, sc.seed, pi, sc.shards, threads);
        const auto t1 = std::chrono::steady_clock::now();

        SimPoint p;
        p.snr_db = db_points[pi];
        p.frames = st.frames;
        p.errors = st.errors;
        p.fer = st.frames ? static_cast<double>(st.errors) / static_cast<double>(st.frames) : 0.0;
        const Interval ci = wilson_interval(st.errors, st.frames);
        p.ci_lo = ci.lo;
        p.ci_hi = ci.hi;
        p.exhausted = st.exhausted;
        p.seconds = std::chrono::duration<double>(t1 - t0).count();
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<SimPoint> run_campaign(const Scenario& sc, int threads_override) {
    int threads = threads_override >= 0 ? threads_override : sc.threads;
    if (threads == 0) threads = env_default_threads();
    return run_campaign_impl(sc, threads, false);
}

std::vector<SimPoint> run_campaign_serial(const Scenario& sc) {
    return run_campaign_impl(sc, 1, true);
}

}  // namespace hrs
