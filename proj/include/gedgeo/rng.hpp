#pragma once

#include <cstdint>

namespace gedgeo {

// Counter-based deterministic PRNG. Every value is a pure function of
// (seed, stream tag, counter), so datasets, weights, and sampled plans are
// bit-reproducible across platforms and across partial re-runs.
//
// Algorithm: the SplitMix64 output function applied to
//   seed  -> mixed with the golden-ratio increment per step.
// Reference constants are the standard SplitMix64 ones.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// A named sub-stream of a master seed. Tag values separate independent
// uses (node counts, edges, labels, weights, ...) so adding a consumer
// never shifts another consumer's values.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t tag)
        : state_(splitmix64(seed ^ (0xd1b54a32d192ed03ULL * (tag + 1)))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double next_double(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, bound). Lemire multiply-shift reduction;
    // the bias is below 2^-32 for the bounds used here.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

// Stream tags used across the library.
namespace rng_tag {
inline constexpr std::uint64_t kNodeCount = 1;
inline constexpr std::uint64_t kEdges = 2;
inline constexpr std::uint64_t kLabels = 3;
inline constexpr std::uint64_t kJitter = 4;
inline constexpr std::uint64_t kSplit = 5;
inline constexpr std::uint64_t kWeights = 6;
inline constexpr std::uint64_t kPlan = 7;
inline constexpr std::uint64_t kPermutation = 8;
inline constexpr std::uint64_t kPerturbation = 9;
}  // namespace rng_tag

}  // namespace gedgeo
