#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "alcove/rng.hpp"

using namespace alcove;

TEST_CASE("splitmix64 reference outputs for seed 0") {
    Rng rng(0);
    CHECK_EQ(rng.next_u64(), 0xE220A8397B1DCDAFULL);
    CHECK_EQ(rng.next_u64(), 0x6E789E6AA1B965F4ULL);
    CHECK_EQ(rng.next_u64(), 0x06C45D188009454FULL);
}

TEST_CASE("same seed gives same stream") {
    Rng a(123456789), b(123456789);
    for (int i = 0; i < 100; ++i) CHECK_EQ(a.next_u64(), b.next_u64());
}

TEST_CASE("next_u01 stays in the unit interval") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.next_u01();
        CHECK_GE(u, 0.0);
        CHECK_LT(u, 1.0);
    }
}

TEST_CASE("next_below respects the bound") {
    Rng rng(11);
    for (int i = 0; i < 10000; ++i) CHECK_LT(rng.next_below(6), 6u);
    CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("bernoulli at the endpoints is deterministic") {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        CHECK_FALSE(rng.bernoulli(Rat(0)));
        CHECK(rng.bernoulli(Rat(1)));
    }
}

TEST_CASE("bernoulli frequency matches an exact rational probability") {
    Rng rng(42);
    int hits = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i)
        if (rng.bernoulli(frac(3, 7))) ++hits;
    double freq = static_cast<double>(hits) / trials;
    CHECK_LT(std::abs(freq - 3.0 / 7.0), 0.01);
}

TEST_CASE("geometric has the right mean") {
    Rng rng(5);
    double sum = 0;
    const int trials = 50000;
    for (int i = 0; i < trials; ++i) sum += static_cast<double>(rng.geometric(frac(1, 3)));
    CHECK_LT(std::abs(sum / trials - 3.0), 0.05);
    CHECK_THROWS_AS(rng.geometric(Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(rng.geometric(Rat(2)), std::invalid_argument);
}

TEST_CASE("split streams differ from each other and are reproducible") {
    Rng root = rng_root(99);
    Rng s0 = root.split(0);
    Rng s1 = root.split(1);
    Rng s0_again = root.split(0);  // split depends on the seed, not the stream position
    std::uint64_t a = s0.next_u64();
    CHECK_NE(a, s1.next_u64());
    CHECK_EQ(a, s0_again.next_u64());
}

TEST_CASE("cumulative thresholds partition the draw space") {
    std::vector<Rat> probs{frac(1, 2), frac(1, 4), frac(1, 4)};
    auto th = cumulative_thresholds(probs);
    REQUIRE_EQ(th.size(), 3u);
    CHECK_EQ(th[0], 0x8000000000000000ULL);
    CHECK_EQ(th[1], 0xC000000000000000ULL);
    CHECK_EQ(th[2], 0xFFFFFFFFFFFFFFFFULL);  // full mass clamps one step short

    std::vector<Rat> partial{frac(1, 3)};
    auto th2 = cumulative_thresholds(partial);
    CHECK_EQ(th2[0], 0x5555555555555555ULL);

    std::vector<Rat> bad{frac(2, 3), frac(1, 2)};
    CHECK_THROWS_AS(cumulative_thresholds(bad), std::invalid_argument);
}

TEST_CASE("pick_threshold hits every branch with plausible frequency") {
    std::vector<Rat> probs{frac(1, 2), frac(1, 4)};
    auto th = cumulative_thresholds(probs);
    Rng rng(17);
    int counts[3] = {0, 0, 0};
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) ++counts[pick_threshold(rng, th)];
    CHECK_LT(std::abs(counts[0] / double(trials) - 0.50), 0.01);
    CHECK_LT(std::abs(counts[1] / double(trials) - 0.25), 0.01);
    CHECK_LT(std::abs(counts[2] / double(trials) - 0.25), 0.01);
}
