#pragma once

#include <cstdint>
#include <random>

namespace padua {

using RngEngine = std::mt19937_64;

// SplitMix64 finalizer; used to derive well-mixed stream seeds from
// structured keys such as (master, trial, sensor).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed) { return splitmix64(seed); }

template <typename... Keys>
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key, Keys... rest) {
    return mix_seed(splitmix64(seed ^ (key + 0x9e3779b97f4a7c15ULL)), rest...);
}

// Stream-seeded engine. Identical keys give identical streams no matter in
// which order or on which thread the streams are consumed.
template <typename... Keys>
RngEngine make_stream(std::uint64_t master, Keys... keys) {
    return RngEngine(mix_seed(master, static_cast<std::uint64_t>(keys)...));
}

// Uniform double in [0,1) built from the raw 64-bit output. The standard
// distributions are implementation-defined; this mapping is not.
inline double uniform01(RngEngine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(RngEngine& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

} // namespace padua
