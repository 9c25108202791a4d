#include "alcove/rng.hpp"

#include <limits>
#include <stdexcept>

namespace alcove {

static_assert(sizeof(unsigned long) == 8, "u64 <-> mpz conversions assume 64-bit unsigned long");

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_below: zero bound");
    // rejection sampling over the largest multiple of bound
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    for (;;) {
        std::uint64_t x = next_u64();
        if (x <= limit || limit == std::numeric_limits<std::uint64_t>::max()) return x % bound;
    }
}

bool Rng::bernoulli(const Rat& p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    // Walk the binary expansion of p in 64-bit blocks. num/den in (0,1).
    Int num = p.get_num();
    Int den = p.get_den();
    for (;;) {
        num <<= 64;
        Int block_z = num / den;
        num -= block_z * den;  // remainder scaled back into [0, den)
        std::uint64_t block = block_z.get_ui();
        std::uint64_t draw = next_u64();
        if (draw < block) return true;
        if (draw > block) return false;
        if (num == 0) return false;  // expansion terminated exactly at the block edge
    }
}

std::uint64_t Rng::geometric(const Rat& p) {
    if (p <= 0 || p > 1) throw std::invalid_argument("Rng::geometric: p must be in (0,1]");
    std::uint64_t trials = 1;
    while (!bernoulli(p)) ++trials;
    return trials;
}

Rng Rng::split(std::uint64_t stream) const {
    // Derive a substream seed from the snapshot seed, not the evolving state, so the
    // substream layout is independent of how much of the parent was consumed.
    std::uint64_t s = seed_snapshot_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    Rng child(s);
    child.next_u64();  // decorrelate nearby stream indices
    child.seed_snapshot_ = s;
    return child;
}

Rng rng_root(std::uint64_t seed) {
    Rng r(seed);
    r.seed_snapshot_ = seed;
    return r;
}

std::vector<std::uint64_t> cumulative_thresholds(const std::vector<Rat>& probs) {
    std::vector<std::uint64_t> out;
    out.reserve(probs.size());
    Rat cum(0);
    Int two64 = Int(1) << 64;
    for (const Rat& p : probs) {
        if (p < 0) throw std::invalid_argument("cumulative_thresholds: negative probability");
        cum += p;
        if (cum > 1) throw std::invalid_argument("cumulative_thresholds: probabilities sum past 1");
        Int t = (cum.get_num() * two64) / cum.get_den();
        if (t >= two64) t = two64 - 1;  // cum == 1: accept 2^-64 slip into the remainder
        out.push_back(mpz_get_ui(t.get_mpz_t()));  // t < 2^64 and unsigned long is 64-bit here
    }
    return out;
}

std::size_t pick_threshold(Rng& rng, const std::vector<std::uint64_t>& thresholds) {
    std::uint64_t u = rng.next_u64();
    for (std::size_t k = 0; k < thresholds.size(); ++k)
        if (u < thresholds[k]) return k;
    return thresholds.size();
}

}  // namespace alcove
