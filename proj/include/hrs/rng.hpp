#pragma once

#include <cstdint>
#include <random>

namespace hrs {

// SplitMix64 finalizer, used as the seed mixer for substream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic substream derivation.
///
/// The master seed and up to three stream indices (point, round, shard)
/// are folded through SplitMix64 one word at a time; the result seeds a
/// 64-bit Mersenne twister. Substreams with any differing index are
/// decorrelated, and the derivation depends only on (seed, indices), so
/// results are reproducible for a fixed (seed, shard count) no matter
/// how shards are scheduled across threads.
inline std::mt19937_64 substream(std::uint64_t master, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return std::mt19937_64(s);
}

}  // namespace hrs
