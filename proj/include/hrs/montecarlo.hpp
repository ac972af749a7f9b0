#pragma once

#include <cstdint>
#include <vector>

#include "hrs/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hrs::mc {

struct StopRule {
    std::uint64_t min_errors = 200;
    std::uint64_t max_frames = 2'000'000;
};

struct TrialStats {
    std::uint64_t frames = 0;
    std::uint64_t errors = 0;
    bool exhausted = false;  // max_frames hit before min_errors
};

inline int hardware_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Round schedule shared by the serial and parallel drivers. Trials run in
// rounds of `shards` independent substreams; the stop rule is evaluated
// only on round boundaries, so the totals depend on (seed, shards) alone
// and never on thread count or scheduling order. Round sizes grow
// geometrically so high-error-rate points stop early without a large
// overshoot.
inline std::vector<std::uint64_t> round_shard_counts(std::uint64_t round,
                                                     std::uint64_t done_frames,
                                                     const StopRule& stop, int shards) {
    const std::uint64_t remaining =
        stop.max_frames > done_frames ? stop.max_frames - done_frames : 0;
    if (remaining == 0) return {};
    std::uint64_t target = (4 * stop.min_errors + 1) << std::min<std::uint64_t>(round, 40);
    if (target > remaining) target = remaining;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(shards), target / shards);
    const std::uint64_t extra = target % shards;
    for (std::uint64_t s = 0; s < extra; ++s) counts[static_cast<std::size_t>(s)] += 1;
    return counts;
}

/// Serial reference driver. Kernel signature:
///   std::uint64_t kernel(std::mt19937_64& rng, std::uint64_t n_trials)
/// returning the number of errored trials. Must be safe to call with
/// distinct rng objects concurrently (pure apart from the rng).
template <class Kernel>
TrialStats run_trials_serial(const Kernel& kernel, StopRule stop, std::uint64_t seed,
                             std::uint64_t stream_tag, int shards) {
    TrialStats st;
    for (std::uint64_t round = 0;; ++round) {
        const auto counts = round_shard_counts(round, st.frames, stop, shards);
        if (counts.empty()) break;
        for (int s = 0; s < shards; ++s) {
            const std::uint64_t n = counts[static_cast<std::size_t>(s)];
            if (n == 0) continue;
            auto rng = substream(seed, stream_tag, round, static_cast<std::uint64_t>(s));
            st.errors += kernel(rng, n);
            st.frames += n;
        }
        if (st.errors >= stop.min_errors) return st;
    }
    st.exhausted = st.errors < stop.min_errors;
    return st;
}

/// OpenMP driver; shards of one round run in parallel. Identical totals
/// to run_trials_serial for the same (seed, shards).
template <class Kernel>
TrialStats run_trials(const Kernel& kernel, StopRule stop, std::uint64_t seed,
                      std::uint64_t stream_tag, int shards, int threads) {
    if (threads == 1) return run_trials_serial(kernel, stop, seed, stream_tag, shards);
    TrialStats st;
    for (std::uint64_t round = 0;; ++round) {
        const auto counts = round_shard_counts(round, st.frames, stop, shards);
        if (counts.empty()) break;
        std::uint64_t round_errors = 0, round_frames = 0;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) reduction(+ : round_errors, round_frames) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
        for (int s = 0; s < shards; ++s) {
            const std::uint64_t n = counts[static_cast<std::size_t>(s)];
            if (n == 0) continue;
            auto rng = substream(seed, stream_tag, round, static_cast<std::uint64_t>(s));
            round_errors += kernel(rng, n);
            round_frames += n;
        }
        st.errors += round_errors;
        st.frames += round_frames;
        if (st.errors >= stop.min_errors) return st;
    }
    st.exhausted = st.errors < stop.min_errors;
    return st;
}

}  // namespace hrs::mc
