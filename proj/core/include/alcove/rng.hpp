#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Splittable counter-based generator. All randomized output in the project is a pure
// function of (seed, algorithm id), so runs are byte-reproducible.
class Rng {
public:
    static constexpr const char* kAlgorithm = "splitmix64-v1";

    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // 53-bit uniform in [0,1).
    double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) without modulo bias.
    std::uint64_t next_below(std::uint64_t bound);

    // Exact Bernoulli(p) for rational p in [0,1]: compares the bit stream against the
    // binary expansion of p one 64-bit block at a time, so there is no rounding bias.
    bool bernoulli(const Rat& p);

    // Geometric on {1,2,...} with success probability p, sampled by exact Bernoulli
    // trials (distribution is exact, cost is O(1/p) expected).
    std::uint64_t geometric(const Rat& p);

    // Independent substream derived from this generator's seed and a stream index.
    Rng split(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_snapshot_; }

private:
    std::uint64_t state_;
    std::uint64_t seed_snapshot_ = 0;

    friend Rng rng_root(std::uint64_t);
};

// Root generator for a run; records the user-facing seed for provenance output.
Rng rng_root(std::uint64_t seed);

// 64-bit cumulative thresholds floor(cum_k * 2^64) from exact probabilities whose sum
// must be <= 1. One u64 draw then selects the first k with draw < threshold[k];
// draws past the last threshold mean "no event" (the lazy remainder of the row).
// Per-draw bias is below 2^-63, far under every statistical tolerance in the tests.
std::vector<std::uint64_t> cumulative_thresholds(const std::vector<Rat>& probs);

// Index of the selected event, or thresholds.size() for the lazy remainder.
std::size_t pick_threshold(Rng& rng, const std::vector<std::uint64_t>& thresholds);

}  // namespace alcove
