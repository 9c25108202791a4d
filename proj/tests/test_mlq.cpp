#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "alcove/chain.hpp"
#include "alcove/hecke.hpp"
#include "alcove/mlq.hpp"
#include "alcove/perm.hpp"

using namespace alcove;

namespace {

std::vector<Rat> ones(int n) { return std::vector<Rat>(n, Rat(1)); }

Tuple three_species(int n, int k, int l) {
    Tuple lam;
    for (int a = 0; a < k; ++a) lam.push_back(0);
    for (int a = 0; a < l; ++a) lam.push_back(1);
    for (int a = 0; a < n - k - l; ++a) lam.push_back(2);
    return lam;
}

bool positive_multiple(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    REQUIRE_EQ(a.size(), b.size());
    std::size_t pivot = 0;
    while (pivot < a.size() && a[pivot] == 0 && b[pivot] == 0) ++pivot;
    if (pivot == a.size()) return true;
    if (a[pivot] == 0 || b[pivot] == 0 || (a[pivot] > 0) != (b[pivot] > 0)) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] * b[pivot] != b[k] * a[pivot]) return false;
    return true;
}

}  // namespace

TEST_CASE("enumeration counts follow the binomial product") {
    CHECK_EQ(enumerate_mlq({1, 2}, 2).size(), 2u);
    CHECK_EQ(enumerate_mlq({0, 1}, 2).size(), 2u);
    CHECK_EQ(enumerate_mlq({1, 2, 3}, 3).size(), 9u);
    CHECK_EQ(enumerate_mlq({0, 0, 1, 1}, 4).size(), 6u);
    for (const MultilineQueue& q : enumerate_mlq({1, 2, 3}, 3)) {
        REQUIRE_EQ(q.row_count(), 4);
        CHECK_EQ(q.row(0).size(), 0u);
        CHECK_EQ(q.row(1).size(), 1u);
        CHECK_EQ(q.row(2).size(), 2u);
        CHECK_EQ(q.row(3).size(), 3u);
    }
}

TEST_CASE("queue construction validates its rows") {
    CHECK_THROWS_AS(MultilineQueue(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(MultilineQueue(2, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(MultilineQueue(0, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_mlq({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_mlq({2, 1}, 2), std::invalid_argument);
}

TEST_CASE("weight counts balls above the bottom row") {
    MultilineQueue bottom_only(3, {{}, {1, 2, 3}});
    CHECK_EQ(bottom_only.weight(), Poly::constant(3, Rat(1)));
    MultilineQueue q(3, {{2}, {1, 2}, {1, 2, 3}});
    Poly expect(3);
    expect.add_term({1, 2, 0}, Rat(1));
    CHECK_EQ(q.weight(), expect);
    CHECK_EQ(q.weight().eval(ones(3)), Rat(1));
    CHECK(q.has_ball(0, 2));
    CHECK_FALSE(q.has_ball(0, 1));
}

TEST_CASE("vertical paths in the one-column-per-species case") {
    std::vector<MultilineQueue> qs = enumerate_mlq({1, 1}, 2);
    REQUIRE_EQ(qs.size(), 1u);
    CHECK_EQ(bully_paths(qs[0]).bottom_word, Tuple{1, 1});
}

TEST_CASE("a lone top ball bullies its own column") {
    for (int c : {1, 2}) {
        MultilineQueue q(2, {{c}, {1, 2}});
        BullyLabeling bl = bully_paths(q);
        CHECK_EQ(bl.bottom_word[c - 1], 0);
        CHECK_EQ(bl.bottom_word[2 - c], 1);
    }
}

TEST_CASE("paths wrap cyclically when no column at or after theirs is free") {
    // top ball at column 3: the row below has balls at 1 and 2 only, so the
    // path wraps around the cylinder and claims column 1
    MultilineQueue wrap(3, {{3}, {1, 2}, {1, 2, 3}});
    BullyLabeling bw = bully_paths(wrap);
    CHECK_EQ(bw.labels[1], std::vector<int>{0, 1});
    CHECK_EQ(bw.bottom_word, Tuple{0, 1, 2});
    // top ball at column 3 with column 3 free below: claims straight down
    MultilineQueue straight(3, {{3}, {1, 3}, {1, 2, 3}});
    BullyLabeling bs = bully_paths(straight);
    CHECK_EQ(bs.labels[1], std::vector<int>{1, 0});
    CHECK_EQ(bs.bottom_word, Tuple{1, 2, 0});
}

TEST_CASE("bully paths reject decreasing row counts") {
    MultilineQueue q(2, {{1, 2}, {1}});
    CHECK_THROWS_AS(bully_paths(q), std::invalid_argument);
}

TEST_CASE("queue sums reproduce the ring family at t = 0") {
    for (const Tuple& lam : {Tuple{0, 1}, Tuple{1, 2}, Tuple{0, 1, 2}, Tuple{1, 2, 3},
                             Tuple{0, 0, 1, 1}, Tuple{1, 1, 2, 2}}) {
        auto fam = mlq_family(lam);
        PolyFamily f = build_f_family(lam, Rat(0));
        REQUIRE_EQ(fam.size(), f.size());
        for (const auto& [mu, poly] : fam) CHECK_EQ(poly, f.at(mu));
    }
}

TEST_CASE("family total at the all-ones point counts the queues") {
    auto fam = mlq_family({1, 2, 3});
    Rat total(0);
    for (const auto& [mu, poly] : fam) total += poly.eval(ones(3));
    CHECK_EQ(total, Rat(9));
}

TEST_CASE("three-row queues for the seam event ignore the last column") {
    const int n = 4;
    int seen = 0;
    for (int k = 0; k + 1 <= n; ++k)
        for (int l = 1; k + l < n; ++l)
            for (const MultilineQueue& q : enumerate_mlq(three_species(n, k, l), n)) {
                Tuple w = bully_paths(q).bottom_word;
                if (w.front() != 1 || w.back() != 2) continue;
                ++seen;
                CHECK_EQ(q.weight().max_exponent(n), 0);
            }
    CHECK(seen > 0);
}

TEST_CASE("correlation closed forms validate their inputs") {
    CHECK_THROWS_AS(correlation_e(3, 2, 2, frac(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(correlation_e(3, 1, 2, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(correlation_d(3, 2, 2, frac(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(correlation_d(1, 0, 1, frac(1, 2)), std::invalid_argument);
}

TEST_CASE("degenerate coarsenings have zero seam probability") {
    CHECK_EQ(correlation_d(4, 2, 0, frac(1, 2)), Rat(0));
    CHECK_EQ(correlation_d(4, 1, 3, frac(1, 2)), Rat(0));
}

TEST_CASE("adjacency probabilities satisfy inclusion-exclusion") {
    const int n = 4;
    const Rat p = frac(1, 2);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rat pie = correlation_d(n, i - 1, j - i, p) - correlation_d(n, i, j - i - 1, p) -
                      correlation_d(n, i - 1, j - i + 1, p) + correlation_d(n, i, j - i, p);
            CHECK_EQ(correlation_e(n, i, j, p), pie);
        }
}

TEST_CASE("adjacency probabilities match the exact chain solve") {
    const int n = 3;
    const Rat p = frac(3, 4);
    StoneSystem stones({1, 2, 2});
    std::vector<Rat> chi{1 - p, Rat(1), Rat(1)};
    Chain ch = stoned_masep_chain({1, 2, 3}, stones, chi, Rat(0));
    std::vector<Rat> pi = ch.stationary_exact();
    const Rat omega_count = Rat(static_cast<long>(stones.omega().size()));
    int placements = 0;
    for (const Perm& sigma : stones.omega()) {
        if (sigma(1) != n) continue;
        ++placements;
        Rat margin(0);
        for (std::size_t s = 0; s < ch.size(); ++s) {
            std::vector<int> sig(ch.key(s).begin() + n, ch.key(s).end());
            if (sig == sigma.one_line()) margin += pi[s];
        }
        CHECK_EQ(margin, 1 / omega_count);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Rat sum(0);
                for (std::size_t s = 0; s < ch.size(); ++s) {
                    std::vector<int> key = ch.key(s);
                    Tuple mu(key.begin(), key.begin() + n);
                    std::vector<int> sig(key.begin() + n, key.end());
                    if (sig == sigma.one_line() && mu.front() == i && mu.back() == j)
                        sum += pi[s];
                }
                CHECK_EQ(sum * omega_count, correlation_e(n, i, j, p));
            }
    }
    CHECK_EQ(placements, 2);
}

TEST_CASE("coarsened seam probabilities match the projected chain") {
    const int n = 3;
    const Rat p = frac(1, 2);
    StoneSystem stones({1, 2, 2});
    std::vector<Rat> chi{1 - p, Rat(1), Rat(1)};
    Chain fine = stoned_masep_chain({1, 2, 3}, stones, chi, Rat(0));
    auto pushed = project_stationary(fine, fine.stationary_exact(), three_species(n, 0, 1));
    const Rat omega_count = Rat(static_cast<long>(stones.omega().size()));
    for (const Perm& sigma : stones.omega()) {
        if (sigma(1) != n) continue;
        Rat sum(0);
        for (const auto& [state, mass] : pushed) {
            Tuple mu(state.begin(), state.begin() + n);
            std::vector<int> sig(state.begin() + n, state.end());
            if (sig == sigma.one_line() && mu.front() == 1 && mu.back() == 2) sum += mass;
        }
        CHECK_EQ(sum * omega_count, correlation_d(n, 0, 1, p));
    }
}

TEST_CASE("projected stationary laws match directly built coarse chains") {
    StoneSystem stones({1, 2, 2});
    const Rat t = frac(1, 4);
    std::vector<Rat> chi{frac(1, 2), Rat(1), Rat(1)};
    Chain fine = stoned_masep_chain({1, 2, 3}, stones, chi, t);
    std::vector<Rat> pi = fine.stationary_exact();
    for (const Tuple& lp : {Tuple{1, 1, 2}, Tuple{1, 2, 2}, Tuple{0, 1, 1}}) {
        Chain coarse = stoned_masep_chain(lp, stones, chi, t);
        std::vector<Rat> pic = coarse.stationary_exact();
        for (const auto& [state, mass] : project_stationary(fine, pi, lp))
            CHECK_EQ(mass, pic[coarse.index_of(state)]);
    }
}

TEST_CASE("four-species projection agrees with the family formula") {
    StoneSystem stones({1, 2, 2, 2});
    const Rat t = frac(1, 4);
    std::vector<Rat> chi{frac(1, 2), Rat(1), Rat(1), Rat(1)};
    Tuple lam{1, 2, 3, 4};
    Chain fine = stoned_masep_chain(lam, stones, chi, t);
    PolyFamily fam = build_f_family(lam, t);
    std::vector<Rat> v;
    Rat z(0);
    for (std::size_t s = 0; s < fine.size(); ++s) {
        std::vector<int> key = fine.key(s);
        Tuple mu(key.begin(), key.begin() + 4);
        Perm sigma = Perm::from_one_line({key[4], key[5], key[6], key[7]});
        v.push_back(fam.at(mu).eval(sigma.act(chi)));
        z += v.back();
    }
    REQUIRE(fine.is_stationary(v));
    for (Rat& mass : v) mass /= z;
    for (const Tuple& lp : {Tuple{1, 2, 2, 2}, Tuple{1, 1, 1, 2}}) {
        Chain coarse = stoned_masep_chain(lp, stones, chi, t);
        std::vector<Rat> pic = coarse.stationary_exact();
        for (const auto& [state, mass] : project_stationary(fine, v, lp))
            CHECK_EQ(mass, pic[coarse.index_of(state)]);
    }
}

TEST_CASE("limit directions match the published low-rank forms") {
    for (const Rat& p : {frac(1, 4), frac(1, 2), frac(3, 4)}) {
        std::vector<Rat> v3 = limit_direction(3, p);
        CHECK(positive_multiple(v3, {Rat(3) - 2 * p, p, p - Rat(3)}));
        Rat p2 = p * p;
        std::vector<Rat> v4 = limit_direction(4, p);
        CHECK(positive_multiple(
            v4, {Rat(24) - 30 * p + 9 * p2, Rat(8) - 2 * p - 3 * p2, Rat(-8) + 14 * p - 3 * p2,
                 Rat(-24) + 18 * p - 3 * p2}));
        CHECK(positive_multiple(v3, limit_direction_from_family(3, p)));
        CHECK(positive_multiple(v4, limit_direction_from_family(4, p)));
        Rat s3(0), s4(0);
        for (const Rat& c : v3) s3 += c;
        for (const Rat& c : v4) s4 += c;
        CHECK_EQ(s3, Rat(0));
        CHECK_EQ(s4, Rat(0));
    }
}

TEST_CASE("queues render as dot grids") {
    MultilineQueue q(3, {{2}, {1, 2}, {1, 2, 3}});
    CHECK_EQ(q.str(), ".o.\noo.\nooo\n");
    BullyLabeling bl = bully_paths(q);
    CHECK_EQ(render_labeled(q, bl), ". 0 .\n1 0 .\n1 0 2\n");
}
