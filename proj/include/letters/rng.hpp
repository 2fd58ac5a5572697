#ifndef LETTERS_RNG_HPP
#define LETTERS_RNG_HPP

#include <cstdint>

namespace letters {

// All randomness in this project comes from the SplitMix64 stream
// (Steele, Lea & Flood's mixer). Being counter-based, the i-th output can
// be computed directly, so parallel and serial consumers see identical
// bits. Experiment outputs record this identifier so results stay
// reproducible across builds.
inline constexpr const char* kRngAlgorithm = "splitmix64";

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// i-th output of the SplitMix64 stream seeded with `seed`.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    return splitmix64_finalize(seed + (i + 1) * kSplitMix64Gamma);
}

// Per-trial (or per-line) seed derived from a master seed and an index.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64_at(master_seed, index);
}

}  // namespace letters

#endif
