#include "hrs/coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hrs/isotonic.hpp"
#include "hrs/special.hpp"

namespace hrs {

namespace {

int bit_width_of(unsigned v) { return v == 0 ? 0 : std::bit_width(v); }

// Tap mask with bit i = coefficient of delay i (bit 0 acts on the current
// input). Converts the written octal value, whose MSB is the current-input
// tap, by reversing its bits within its own width.
unsigned octal_to_taps(unsigned g) {
    const int w = bit_width_of(g);
    unsigned taps = 0;
    for (int i = 0; i < w; ++i) {
        if (g & (1u << (w - 1 - i))) taps |= 1u << i;
    }
    return taps;
}

}  // namespace

ConvCode ConvCode::from_octal(const std::vector<std::vector<unsigned>>& gen_octal) {
    if (gen_octal.empty() || gen_octal.front().empty()) {
        throw std::invalid_argument("ConvCode: empty generator matrix");
    }
    ConvCode c;
    c.gen_octal_ = gen_octal;
    c.k_in_ = static_cast<int>(gen_octal.size());
    c.n_out_ = static_cast<int>(gen_octal.front().size());
    if (c.n_out_ > 8) throw std::invalid_argument("ConvCode: more than 8 outputs unsupported");
    for (const auto& row : gen_octal) {
        if (static_cast<int>(row.size()) != c.n_out_) {
            throw std::invalid_argument("ConvCode: ragged generator matrix");
        }
    }
    c.memory_.resize(static_cast<std::size_t>(c.k_in_), 0);
    std::vector<std::vector<unsigned>> taps(gen_octal.size());
    for (std::size_t j = 0; j < gen_octal.size(); ++j) {
        taps[j].resize(gen_octal[j].size());
        int m = 0;
        for (std::size_t o = 0; o < gen_octal[j].size(); ++o) {
            taps[j][o] = octal_to_taps(gen_octal[j][o]);
            m = std::max(m, bit_width_of(gen_octal[j][o]) - 1);
        }
        c.memory_[j] = m;
    }
    int total_memory = 0;
    for (int m : c.memory_) total_memory += m;
    if (total_memory > 15) throw std::invalid_argument("ConvCode: more than 2^15 states");
    c.tail_steps_ = *std::max_element(c.memory_.begin(), c.memory_.end());
    c.n_states_ = 1 << total_memory;
    c.n_inputs_ = 1 << c.k_in_;

    // Per-input register: bit i holds the input from i+1 steps ago. A step
    // evaluates taps over the word (current_bit | register << 1), then
    // shifts the current bit in.
    c.next_state_.resize(static_cast<std::size_t>(c.n_states_) * c.n_inputs_);
    c.out_pattern_.resize(static_cast<std::size_t>(c.n_states_) * c.n_inputs_);
    for (int s = 0; s < c.n_states_; ++s) {
        // unpack per-input registers from the combined state index
        std::vector<unsigned> reg(static_cast<std::size_t>(c.k_in_));
        int shift = 0;
        for (int j = 0; j < c.k_in_; ++j) {
            reg[static_cast<std::size_t>(j)] =
                (static_cast<unsigned>(s) >> shift) & ((1u << c.memory_[j]) - 1u);
            shift += c.memory_[j];
        }
        for (int u = 0; u < c.n_inputs_; ++u) {
            std::uint8_t pattern = 0;
            for (int o = 0; o < c.n_out_; ++o) {
                unsigned acc = 0;
                for (int j = 0; j < c.k_in_; ++j) {
                    const unsigned uj = (static_cast<unsigned>(u) >> j) & 1u;
                    const unsigned word = uj | (reg[static_cast<std::size_t>(j)] << 1);
                    acc ^= static_cast<unsigned>(
                        std::popcount(word & taps[static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(o)]));
                }
                pattern |= static_cast<std::uint8_t>((acc & 1u) << o);
            }
            unsigned ns = 0;
            int sh = 0;
            for (int j = 0; j < c.k_in_; ++j) {
                const unsigned uj = (static_cast<unsigned>(u) >> j) & 1u;
                const unsigned mask = (1u << c.memory_[j]) - 1u;
                const unsigned r =
                    ((reg[static_cast<std::size_t>(j)] << 1) | uj) & mask;
                ns |= r << sh;
                sh += c.memory_[j];
            }
            c.next_state_[static_cast<std::size_t>(s) * c.n_inputs_ + u] =
                static_cast<std::uint16_t>(ns);
            c.out_pattern_[static_cast<std::size_t>(s) * c.n_inputs_ + u] = pattern;
        }
    }

    std::ostringstream name;
    name << "cc";
    for (std::size_t j = 0; j < gen_octal.size(); ++j) {
        for (std::size_t o = 0; o < gen_octal[j].size(); ++o) {
            name << (j + o ? "-" : "_") << std::oct << gen_octal[j][o];
        }
    }
    c.id_ = name.str();
    return c;
}

ConvCode ConvCode::rate_half_k3() { return from_octal({{05, 07}}); }

ConvCode ConvCode::rate_two_thirds() {
    return from_octal({{023, 035, 0}, {0, 05, 013}});
}

std::vector<std::uint8_t> ConvCode::encode(const std::vector<std::uint8_t>& info) const {
    if (info.size() % static_cast<std::size_t>(k_in_) != 0) {
        throw std::invalid_argument("ConvCode::encode: frame length not divisible by k_in");
    }
    const std::size_t steps = info.size() / static_cast<std::size_t>(k_in_) +
                              static_cast<std::size_t>(tail_steps_);
    std::vector<std::uint8_t> out;
    out.reserve(steps * static_cast<std::size_t>(n_out_));
    unsigned state = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        unsigned u = 0;
        if (t * static_cast<std::size_t>(k_in_) < info.size()) {
            for (int j = 0; j < k_in_; ++j) {
                u |= static_cast<unsigned>(info[t * static_cast<std::size_t>(k_in_) +
                                                static_cast<std::size_t>(j)] & 1u)
                     << j;
            }
        }
        const std::size_t idx = static_cast<std::size_t>(state) * n_inputs_ + u;
        const std::uint8_t pattern = out_pattern_[idx];
        for (int o = 0; o < n_out_; ++o) {
            out.push_back(static_cast<std::uint8_t>((pattern >> o) & 1u));
        }
        state = next_state_[idx];
    }
    return out;
}

std::vector<std::uint8_t> ConvCode::viterbi_decode(const std::vector<double>& received) const {
    if (received.size() % static_cast<std::size_t>(n_out_) != 0) {
        throw std::invalid_argument("ConvCode::viterbi_decode: length not divisible by n_out");
    }
    const std::size_t steps = received.size() / static_cast<std::size_t>(n_out_);
    if (steps < static_cast<std::size_t>(tail_steps_)) {
        throw std::invalid_argument("ConvCode::viterbi_decode: shorter than the tail");
    }
    const std::size_t info_steps = steps - static_cast<std::size_t>(tail_steps_);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> metric(static_cast<std::size_t>(n_states_), inf);
    std::vector<double> next_metric(static_cast<std::size_t>(n_states_), inf);
    metric[0] = 0.0;
    // traceback cell packs (input << 8) | predecessor state
    std::vector<std::uint16_t> trace(steps * static_cast<std::size_t>(n_states_));
    const int n_patterns = 1 << n_out_;
    std::vector<double> pattern_metric(static_cast<std::size_t>(n_patterns));

    for (std::size_t t = 0; t < steps; ++t) {
        const double* r = &received[t * static_cast<std::size_t>(n_out_)];
        for (int p = 0; p < n_patterns; ++p) {
            double m = 0.0;
            for (int o = 0; o < n_out_; ++o) {
                const double s = ((p >> o) & 1) ? -1.0 : 1.0;
                const double d = r[o] - s;
                m += d * d;
            }
            pattern_metric[static_cast<std::size_t>(p)] = m;
        }
        std::fill(next_metric.begin(), next_metric.end(), inf);
        std::uint16_t* tb = &trace[t * static_cast<std::size_t>(n_states_)];
        const bool tail = t >= info_steps;
        for (int s = 0; s < n_states_; ++s) {
            const double pm = metric[static_cast<std::size_t>(s)];
            if (pm == inf) continue;
            const int u_max = tail ? 1 : n_inputs_;  // zero-tail: only u = 0
            for (int u = 0; u < u_max; ++u) {
                const std::size_t idx = static_cast<std::size_t>(s) * n_inputs_ + u;
                const int ns = next_state_[idx];
                const double cand = pm + pattern_metric[out_pattern_[idx]];
                if (cand < next_metric[static_cast<std::size_t>(ns)]) {
                    next_metric[static_cast<std::size_t>(ns)] = cand;
                    tb[ns] = static_cast<std::uint16_t>((u << 8) | s);
                }
            }
        }
        metric.swap(next_metric);
    }

    // terminated trellis ends in the all-zero state
    std::vector<std::uint8_t> info(info_steps * static_cast<std::size_t>(k_in_));
    int state = 0;
    for (std::size_t t = steps; t-- > 0;) {
        const std::uint16_t cell = trace[t * static_cast<std::size_t>(n_states_) +
                                         static_cast<std::size_t>(state)];
        const int u = cell >> 8;
        state = cell & 0xff;
        if (t < info_steps) {
            for (int j = 0; j < k_in_; ++j) {
                info[t * static_cast<std::size_t>(k_in_) + static_cast<std::size_t>(j)] =
                    static_cast<std::uint8_t>((u >> j) & 1);
            }
        }
    }
    return info;
}

std::vector<double> bpsk_awgn(const std::vector<std::uint8_t>& bits, double snr,
                              std::mt19937_64& rng) {
    if (!(snr >= 0.0)) throw std::invalid_argument("bpsk_awgn: snr must be >= 0");
    std::vector<double> out(bits.size());
    if (std::isinf(snr)) {
        for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? -1.0 : 1.0;
        return out;
    }
    const double sigma = std::sqrt(0.5 / snr);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[i] = (bits[i] ? -1.0 : 1.0) + sigma * noise(rng);
    }
    return out;
}

double uncoded_awgn_fer(double snr, int frame_len, double mod_const) {
    if (!(snr >= 0.0)) throw std::invalid_argument("uncoded_awgn_fer: snr must be >= 0");
    if (frame_len < 1) throw std::invalid_argument("uncoded_awgn_fer: frame_len must be >= 1");
    if (!(mod_const > 0.0)) throw std::invalid_argument("uncoded_awgn_fer: mod_const must be > 0");
    const double q = q_function(std::sqrt(mod_const * snr));
    if (q <= 0.0) return 0.0;
    return -std::expm1(frame_len * std::log1p(-q));
}

bool FerCurve::uniform_linear(double rel_tol) const {
    if (snr.size() < 2) return false;
    const double step = (snr.back() - snr.front()) / static_cast<double>(snr.size() - 1);
    if (!(step > 0.0)) return false;
    for (std::size_t i = 1; i < snr.size(); ++i) {
        if (std::abs(snr[i] - snr[i - 1] - step) > rel_tol * step) return false;
    }
    return true;
}

bool FerCurve::point_exhausted(std::size_t i) const {
    if (i >= errors.size() || budget_min_errors == 0) return false;
    return errors[i] < budget_min_errors;
}

std::vector<double> DbGrid::points() const {
    if (!(step_db > 0.0) || stop_db < start_db) {
        throw std::invalid_argument("DbGrid: need step > 0 and stop >= start");
    }
    std::vector<double> p;
    const int count = static_cast<int>(std::floor((stop_db - start_db) / step_db + 0.5)) + 1;
    p.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) p.push_back(start_db + i * step_db);
    return p;
}

FerCurve measure_awgn_fer_curve(const ConvCode& code, int frame_len, const DbGrid& grid,
                                const CalibrationBudget& budget, std::uint64_t seed,
                                int shards, int threads) {
    if (frame_len < 1 || frame_len % code.k_in() != 0) {
        throw std::invalid_argument("measure_awgn_fer_curve: bad frame length");
    }
    const auto db_points = grid.points();
    FerCurve curve;
    curve.code_id = code.id();
    curve.frame_len = frame_len;
    curve.budget_min_errors = budget.min_errors;
    curve.budget_max_frames = budget.max_frames;

    const mc::StopRule stop{budget.min_errors, budget.max_frames};
    for (std::size_t pi = 0; pi < db_points.size(); ++pi) {
        const double snr = std::pow(10.0, db_points[pi] / 10.0);
        auto kernel = [&code, frame_len, snr](std::mt19937_64& rng, std::uint64_t n) {
            std::uint64_t errs = 0;
            std::vector<std::uint8_t> info(static_cast<std::size_t>(frame_len));
            for (std::uint64_t k = 0; k < n; ++k) {
                for (auto& b : info) b = static_cast<std::uint8_t>(rng() & 1u);
                const auto coded = code.encode(info);
                const auto rx = bpsk_awgn(coded, snr, rng);
                if (code.viterbi_decode(rx) != info) ++errs;
            }
            return errs;
        };
        const auto st = mc::run_trials(kernel, stop, seed, pi, shards, threads);
        curve.snr.push_back(snr);
        curve.fer.push_back(st.frames ? static_cast<double>(st.errors) /
                                            static_cast<double>(st.frames)
                                      : 0.0);
        curve.frames.push_back(st.frames);
        curve.errors.push_back(st.errors);
    }
    return curve;
}

}  // namespace hrs
