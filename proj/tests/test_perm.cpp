#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "alcove/perm.hpp"
#include "alcove/rng.hpp"

using namespace alcove;

TEST_CASE("Perm basics") {
    Perm id(4);
    CHECK_EQ(id(3), 3);
    Perm w = Perm::from_one_line({2, 3, 1});
    CHECK_EQ(w(1), 2);
    CHECK_EQ((w * w.inverse()).one_line(), Perm(3).one_line());
    CHECK_EQ(w.inversions(), 2);
    CHECK_EQ(Perm::longest(4).inversions(), 6);
    CHECK_THROWS_AS(Perm::from_one_line({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_one_line({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("Perm::act places the j-th value on site w(j)") {
    // sigma = 612453 acting on (y_1,...,y_6) puts y_j on site sigma(j)
    Perm sigma = Perm::from_one_line({6, 1, 2, 4, 5, 3});
    std::vector<int> y{99, 3, 3, 99, 7, 99};
    CHECK_EQ(sigma.act(y), std::vector<int>{3, 3, 99, 99, 7, 99});
}

TEST_CASE("Perm::rotation cycles a tuple") {
    Perm c = Perm::rotation(4);
    std::vector<int> mu{10, 20, 30, 40};
    CHECK_EQ(c.act(mu), std::vector<int>{40, 10, 20, 30});
    CHECK_EQ(c.act(mu), cycle_tuple(mu));
}

TEST_CASE("Perm::all enumerates S_n once") {
    auto all = Perm::all(4);
    CHECK_EQ(all.size(), 24u);
    std::set<std::vector<int>> seen;
    for (const Perm& w : all) seen.insert(w.one_line());
    CHECK_EQ(seen.size(), 24u);
}

namespace {

// independent length oracle: BFS distance from the identity in the Cayley graph
std::map<std::vector<int>, long> signed_bfs(int n) {
    std::vector<SignedPerm> gens;
    for (int i = 1; i < n; ++i) gens.push_back(SignedPerm::adjacent(n, i));
    gens.push_back(SignedPerm::negate_last(n));
    std::map<std::vector<int>, long> dist;
    std::queue<SignedPerm> q;
    dist[SignedPerm(n).one_line()] = 0;
    q.push(SignedPerm(n));
    while (!q.empty()) {
        SignedPerm w = q.front();
        q.pop();
        long d = dist[w.one_line()];
        for (const SignedPerm& s : gens) {
            SignedPerm v = w * s;
            if (!dist.count(v.one_line())) {
                dist[v.one_line()] = d + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("SignedPerm length matches Cayley graph distance") {
    for (int n : {2, 3}) {
        auto dist = signed_bfs(n);
        CHECK_EQ(dist.size(), static_cast<std::size_t>(n == 2 ? 8 : 48));
        for (const auto& [img, d] : dist) {
            SignedPerm w = SignedPerm::from_one_line(img);
            CHECK_EQ(w.length(), d);
        }
    }
}

TEST_CASE("SignedPerm act respects signs") {
    SignedPerm w = SignedPerm::from_one_line({-2, 1, 3});
    CHECK_EQ(w(1), -2);
    CHECK_EQ(w(-1), 2);
    Tuple y{5, 7, 9};
    // value y_j lands on site |w(j)| with the sign of w(j)
    CHECK_EQ(w.act(y), Tuple{7, -5, 9});
    CHECK_EQ((w * w.inverse()).one_line(), SignedPerm(3).one_line());
}

TEST_CASE("AffinePerm window validation") {
    CHECK_THROWS_AS(AffinePerm::from_window({1, 2, 4}), std::invalid_argument);  // wrong sum
    CHECK_THROWS_AS(AffinePerm::from_window({1, 4, 1}), std::invalid_argument);  // repeated residue
    AffinePerm u = AffinePerm::from_window({0, 2, 4});
    CHECK_EQ(u(1), 0);
    CHECK_EQ(u(4), 3);  // u(i + n) = u(i) + n
    CHECK_EQ(u(-2), -3);
}

TEST_CASE("affine simple reflections square to the identity") {
    for (int i = 0; i < 3; ++i) {
        AffinePerm s = AffinePerm::s(3, i);
        CHECK_EQ(s * s, AffinePerm(3));
        CHECK_EQ(s.length(), 1);
    }
}

TEST_CASE("affine length matches word length along random reduced-ish products") {
    // length changes by exactly +-1 with each simple multiplication
    Rng rng(2024);
    AffinePerm w(3);
    long len = 0;
    for (int step = 0; step < 200; ++step) {
        int i = static_cast<int>(rng.next_below(3));
        bool ascent = w.left_ascent(i);
        AffinePerm next = w.left_mul_s(i);
        long expect = len + (ascent ? 1 : -1);
        CHECK_EQ(next.length(), expect);
        w = next;
        len = expect;
    }
}

TEST_CASE("translations have the expected windows and lengths") {
    AffinePerm tau = AffinePerm::translation({1, 0, -1});
    CHECK_EQ(tau(1), 1 + 3 * 1);
    AffinePerm u = tau * tau;
    CHECK_EQ(u.translation_part(), std::vector<long long>{2, 0, -2});
    CHECK_EQ(u.finite_part(), Perm(3));
}

TEST_CASE("finite and translation parts recompose") {
    Rng rng(7);
    AffinePerm w(4);
    for (int step = 0; step < 60; ++step) w = w.left_mul_s(static_cast<int>(rng.next_below(4)));
    Perm bar = w.finite_part();
    std::vector<long long> eta = w.translation_part();
    AffinePerm rebuilt;
    {
        // w = w-bar tau_eta
        std::vector<long long> win(4);
        for (int j = 1; j <= 4; ++j) win[j - 1] = bar(j);
        rebuilt = AffinePerm::from_window(win) * AffinePerm::translation(eta);
    }
    CHECK_EQ(rebuilt, w);
}

TEST_CASE("demazure product absorbs repeated letters") {
    // s_i s_i collapses to s_i
    AffinePerm a = demazure_product(3, {1, 1});
    CHECK_EQ(a, AffinePerm::s(3, 1));
    AffinePerm b = demazure_product(3, {0, 1, 0, 1, 0, 1});
    AffinePerm c = demazure_product(3, {1, 0, 1, 0, 1, 0});
    CHECK_EQ(b.length(), 3);  // the longest element of the parabolic generated by s_0, s_1
    CHECK_EQ(b, c);
}

TEST_CASE("left ascent agrees with length comparison") {
    Rng rng(5);
    AffinePerm w(3);
    for (int step = 0; step < 120; ++step) {
        int i = static_cast<int>(rng.next_below(3));
        CHECK_EQ(w.left_ascent(i), w.left_mul_s(i).length() > w.length());
        w = w.left_mul_s(static_cast<int>(rng.next_below(3)));
    }
}

TEST_CASE("rearrangement classes") {
    auto rc = rearrangement_class({1, 2, 2});
    CHECK_EQ(rc.size(), 3u);
    CHECK_EQ(rc[0], Tuple{1, 2, 2});
    CHECK_EQ(rc[1], Tuple{2, 1, 2});
    CHECK_EQ(rc[2], Tuple{2, 2, 1});

    auto src = signed_rearrangement_class({0, 1});
    // entries may flip sign except zeros
    CHECK_EQ(src.size(), 4u);
    std::set<Tuple> s(src.begin(), src.end());
    CHECK(s.count({-1, 0}));
    CHECK(s.count({0, -1}));
    CHECK(s.count({0, 1}));
    CHECK(s.count({1, 0}));
}

TEST_CASE("ring and type-C generators act on tuples") {
    Tuple mu{1, 2, 3};
    CHECK_EQ(apply_sbar_ring(1, mu), Tuple{2, 1, 3});
    CHECK_EQ(apply_sbar_ring(0, mu), Tuple{3, 2, 1});
    CHECK_EQ(apply_sbar_typec(0, mu), Tuple{-1, 2, 3});
    CHECK_EQ(apply_sbar_typec(3, mu), Tuple{1, 2, -3});
    CHECK_EQ(apply_sbar_typec(2, mu), Tuple{1, 3, 2});
}

TEST_CASE("stone system admissibility and crossing counts") {
    StoneSystem one_stone({1, 1, 1, 1, 1, 2});
    CHECK_EQ(one_stone.omega().size(), 30u);  // n(n-1) placements for a single heavy stone

    StoneSystem rho({1, 1, 1, 2, 2, 3});
    Perm sigma = Perm::from_one_line({3, 4, 6, 1, 5, 2});
    CHECK(rho.admissible(sigma));
    CHECK_EQ(rho.site_densities(sigma), Tuple{2, 3, 1, 1, 2, 1});
    CHECK_EQ(rho.crossing_count(sigma), 3);

    // swapping two same-density stones breaks the cyclic order
    Perm bad = Perm::from_one_line({4, 3, 6, 1, 5, 2});
    CHECK_FALSE(rho.admissible(bad));
}

TEST_CASE("stone system rejects bad density maps") {
    CHECK_THROWS_AS(StoneSystem({2, 2}), std::invalid_argument);     // must start at 1
    CHECK_THROWS_AS(StoneSystem({1, 3}), std::invalid_argument);     // not surjective
    CHECK_THROWS_AS(StoneSystem({1, 2, 1}), std::invalid_argument);  // not nondecreasing
}

TEST_CASE("omega is closed under the auxiliary moves") {
    StoneSystem rho({1, 1, 2, 2});
    auto omega = rho.omega();
    std::set<std::vector<int>> members;
    for (const Perm& s : omega) members.insert(s.one_line());
    for (const Perm& sigma : omega) {
        Tuple d = rho.site_densities(sigma);
        for (int i = 0; i < 4; ++i) {
            int a = i == 0 ? 4 : i, b = i == 0 ? 1 : i + 1;
            if (d[a - 1] < d[b - 1]) {
                Perm moved = (i == 0 ? Perm::ring_swap(4) : Perm::adjacent(4, i)) * sigma;
                CHECK(members.count(moved.one_line()));
            }
        }
    }
}
