#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "alcove/chain.hpp"

using namespace alcove;

namespace {

Chain two_state(const Rat& p, const Rat& q) {
    ChainBuilder b;
    b.add_transition({0}, {1}, p);
    b.add_transition({1}, {0}, q);
    return b.finalize();
}

}  // namespace

TEST_CASE("builder sorts states and validates rows") {
    ChainBuilder b;
    b.add_transition({2}, {1}, frac(1, 2));
    b.add_transition({1}, {2}, frac(1, 3));
    b.add_state({0});
    Chain c = b.finalize();
    REQUIRE_EQ(c.size(), 3u);
    CHECK_EQ(c.key(0), std::vector<int>{0});
    CHECK_EQ(c.key(2), std::vector<int>{2});
    CHECK_EQ(c.label(2), "2");
    CHECK_EQ(c.hold_probability(c.index_of({1})), frac(2, 3));
    CHECK_THROWS_AS(c.index_of({9}), std::invalid_argument);

    ChainBuilder bad;
    bad.add_transition({0}, {1}, frac(2, 3));
    bad.add_transition({0}, {2}, frac(2, 3));
    CHECK_THROWS_AS(bad.finalize(), std::invalid_argument);
    CHECK_THROWS_AS(b.add_transition({0}, {1}, Rat(2)), std::invalid_argument);
}

TEST_CASE("stationary distribution of a two-state chain") {
    Chain c = two_state(frac(1, 3), frac(1, 6));
    CHECK(c.irreducible());
    auto pi = c.stationary_exact();
    // pi proportional to (q, p)
    CHECK_EQ(pi[0], frac(1, 3));
    CHECK_EQ(pi[1], frac(2, 3));
    CHECK(c.is_stationary(pi));
    std::vector<Rat> unnormalized{frac(1, 6), frac(1, 3)};
    CHECK(c.is_stationary(unnormalized));
    std::vector<Rat> wrong{frac(1, 2), frac(1, 2)};
    CHECK_FALSE(c.is_stationary(wrong));
}

TEST_CASE("reducible chains are detected") {
    ChainBuilder b;
    b.add_transition({0}, {1}, Rat(1));
    b.add_state({2});
    Chain c = b.finalize();
    CHECK_FALSE(c.irreducible());
    CHECK_THROWS_AS(c.stationary_exact(), std::domain_error);
}

TEST_CASE("simulation frequencies approach the stationary law") {
    Chain c = two_state(frac(1, 3), frac(1, 6));
    Rng rng(2718);
    auto traj = c.simulate(rng, 0, 200000);
    REQUIRE_EQ(traj.size(), 200001u);
    auto freq = c.empirical(traj, 1000);
    auto pi = to_doubles(c.stationary_exact());
    CHECK_LT(tv_distance(freq, pi), 0.01);
}

TEST_CASE("edge list csv includes holds") {
    Chain c = two_state(frac(1, 2), Rat(1));
    std::string csv = c.edge_list_csv();
    CHECK(csv.find("src,dst,probability_exact,probability_float") == 0);
    CHECK(csv.find("\"0\",\"1\",1/2,0.5") != std::string::npos);
    CHECK(csv.find("\"0\",\"0\",1/2,0.5") != std::string::npos);
    CHECK(csv.find("\"1\",\"0\",1,1") != std::string::npos);
}

TEST_CASE("ring ASEP on two species is symmetric") {
    Chain c = masep_chain({1, 2}, frac(1, 3));
    REQUIRE_EQ(c.size(), 2u);
    auto pi = c.stationary_exact();
    CHECK_EQ(pi[0], frac(1, 2));
    CHECK_EQ(pi[1], frac(1, 2));
}

TEST_CASE("ring TASEP stationary masses for three distinct species") {
    // classical t=0 three-species values: cyclic rotations share masses and the
    // reversed arrangements are lighter by one unit of the partition function
    Chain c = masep_chain({1, 2, 3}, Rat(0));
    REQUIRE_EQ(c.size(), 6u);
    auto pi = c.stationary_exact();
    std::map<std::string, Rat> by_label;
    for (std::size_t i = 0; i < c.size(); ++i) by_label[c.label(i)] = pi[i];
    CHECK_EQ(by_label.at("1,2,3"), by_label.at("2,3,1"));
    CHECK_EQ(by_label.at("1,2,3"), by_label.at("3,1,2"));
    CHECK_EQ(by_label.at("3,2,1"), by_label.at("2,1,3"));
    CHECK_EQ(by_label.at("3,2,1"), by_label.at("1,3,2"));
    Rat total(0);
    for (auto& [k, v] : by_label) total += v;
    CHECK_EQ(total, Rat(1));
    CHECK_EQ(by_label.at("1,2,3") + by_label.at("3,2,1"), frac(1, 3));
    CHECK(by_label.at("1,2,3") > by_label.at("3,2,1"));
}

TEST_CASE("auxiliary TASEP is uniform for two densities") {
    StoneSystem rho({1, 1, 2});
    Chain c = aux_tasep_chain(rho);
    CHECK_EQ(c.size(), rho.omega().size());
    auto pi = c.stationary_exact();
    for (const Rat& m : pi) CHECK_EQ(m, frac(1, static_cast<long>(pi.size())));
}

TEST_CASE("two multi-stone classes conserve their relative winding") {
    // with two stones of each density the dynamics preserve the relative cyclic
    // offset between the classes, so the full cyclic-order set splits in two;
    // the uniform measure still balances on every closed class
    StoneSystem rho({1, 1, 2, 2});
    Chain c = aux_tasep_chain(rho);
    CHECK_EQ(c.size(), 24u);
    CHECK_FALSE(c.irreducible());
    std::vector<Rat> uniform(c.size(), frac(1, 24));
    CHECK(c.is_stationary(uniform));
}

TEST_CASE("auxiliary TASEP with three densities matches the hop structure") {
    StoneSystem rho({1, 1, 2, 3});
    Chain c = aux_tasep_chain(rho);
    CHECK(c.irreducible());
    auto pi = c.stationary_exact();
    CHECK(c.is_stationary(pi));
    // each row's motion probability is K(sigma)/n
    for (std::size_t i = 0; i < c.size(); ++i) {
        Perm sigma = Perm::from_one_line(c.key(i));
        Rat hop(0);
        for (const auto& e : c.row(i)) hop += e.prob;
        CHECK_EQ(hop, frac(rho.crossing_count(sigma), 4));
    }
}

TEST_CASE("stone signal probability formula") {
    CHECK_EQ(stone_signal_probability(Rat(1), Rat(2), Rat(0)), frac(1, 2));
    CHECK_EQ(stone_signal_probability(frac(1, 2), Rat(1), frac(1, 4)), frac(4, 7));
    CHECK_THROWS_AS(stone_signal_probability(Rat(1), Rat(1), Rat(1)), std::invalid_argument);
}

TEST_CASE("stoned ring ASEP rejects invalid chi") {
    StoneSystem rho({1, 1, 2});
    // at t = 0 the signal probability is 1 - chi_j/chi_j', negative when chi_j > chi_j'
    CHECK_THROWS_AS(stoned_masep_chain({0, 1, 1}, rho, {Rat(2), Rat(2), Rat(1)}, Rat(0)),
                    std::invalid_argument);
    // all-zero signals
    CHECK_THROWS_AS(stoned_masep_chain({0, 1, 1}, rho, {Rat(1), Rat(1), Rat(1)}, Rat(0)),
                    std::invalid_argument);
}

TEST_CASE("stoned ring ASEP state space and row sums") {
    StoneSystem rho({1, 1, 2});
    Chain c = stoned_masep_chain({0, 1, 1}, rho, {Rat(1), Rat(1), Rat(2)}, Rat(0));
    CHECK_EQ(c.size(), 3u * rho.omega().size());
    CHECK(c.irreducible());
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<int> key = c.key(i);
        Perm sigma = Perm::from_one_line({key[3], key[4], key[5]});
        CHECK_EQ(c.hold_probability(i), 1 - frac(rho.crossing_count(sigma), 3));
    }
}

TEST_CASE("inhomogeneous TASEP moves only descents") {
    std::map<int, Rat> rates{{1, frac(1, 2)}, {2, frac(1, 3)}, {3, frac(1, 4)}};
    Chain c = itasep_chain({1, 2, 3}, rates);
    CHECK(c.irreducible());
    std::size_t idx = c.index_of({1, 2, 3});
    // only the ring edge (3,1) descends, species 3 hops at rate a_3
    auto& row = c.row(idx);
    REQUIRE_EQ(row.size(), 1u);
    CHECK_EQ(row[0].prob, frac(1, 4) * frac(1, 3));
    CHECK_EQ(c.key(row[0].dst), std::vector<int>{3, 2, 1});
}

TEST_CASE("stoned inhomogeneous TASEP validates p and density count") {
    std::map<int, Rat> rates{{1, frac(1, 2)}, {2, frac(1, 3)}, {3, frac(1, 4)}};
    StoneSystem rho({1, 1, 2});
    std::map<int, Rat> p{{1, frac(1, 3)}, {2, Rat(0)}};
    Chain c = stoned_itasep_chain({1, 2, 3}, rho, p, rates);
    CHECK(c.irreducible());
    CHECK_EQ(c.size(), 6u * rho.omega().size());

    std::map<int, Rat> missing{{1, frac(1, 3)}};
    CHECK_THROWS_AS(stoned_itasep_chain({1, 2, 3}, rho, missing, rates), std::invalid_argument);
    std::map<int, Rat> zero{{1, Rat(0)}, {2, Rat(0)}};
    CHECK_THROWS_AS(stoned_itasep_chain({1, 2, 3}, rho, zero, rates), std::invalid_argument);
    StoneSystem three({1, 2, 3});
    CHECK_THROWS_AS(stoned_itasep_chain({1, 2, 3}, three, p, rates), std::invalid_argument);
}

TEST_CASE("open boundary ASEP reaches every signed rearrangement") {
    Chain c = obasep_chain({0, 1}, frac(1, 2), frac(1, 3), frac(1, 4));
    CHECK_EQ(c.size(), 4u);  // (0,1),(0,-1),(1,0),(-1,0)
    CHECK(c.irreducible());
    auto pi = c.stationary_exact();
    CHECK(c.is_stationary(pi));

    std::size_t idx = c.index_of({0, 1});
    // moves: swap (f_t(0,1) = t) and sign flip at site 2 (beta)
    Rat expect = frac(1, 3) * frac(1, 4) + frac(1, 3) * frac(1, 3);
    Rat total(0);
    for (const auto& e : c.row(idx)) total += e.prob;
    CHECK_EQ(total, expect);
}

TEST_CASE("auxiliary cyclic shift walks the doubled ring") {
    int n = 3;
    std::vector<int> orbit{1};
    std::set<int> seen{1};
    int h = 1;
    for (int k = 0; k < 2 * n - 1; ++k) {
        h = aux_cyclic_shift(n, h);
        orbit.push_back(h);
        seen.insert(h);
    }
    CHECK_EQ(seen.size(), static_cast<std::size_t>(2 * n));
    CHECK_EQ(aux_cyclic_shift(n, h), 1);  // closes the cycle
    CHECK_EQ(orbit, std::vector<int>{1, 2, 3, -3, -2, -1});
    CHECK_THROWS_AS(aux_cyclic_shift(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(aux_cyclic_shift(3, 4), std::invalid_argument);
}

TEST_CASE("stoned open boundary ASEP structure") {
    Tuple lambda{0, 1};
    std::vector<Rat> chi{Rat(1)};
    Rat chi_stone = frac(1, 2);
    Chain c = stoned_obasep_chain(lambda, chi, chi_stone, frac(1, 2), frac(1, 2), Rat(0));
    CHECK_EQ(c.size(), 4u * 4u);  // signed rearrangements x phases
    CHECK(c.irreducible());
    // every state moves its phase deterministically
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK_EQ(c.hold_probability(i), Rat(0));
        int h = c.key(i).back();
        int expect = aux_cyclic_shift(2, h);
        for (const auto& e : c.row(i)) CHECK_EQ(c.key(e.dst).back(), expect);
    }
}

TEST_CASE("project_stationary merges species classes") {
    Chain fine = masep_chain({1, 2, 3}, Rat(0));
    auto pi = fine.stationary_exact();
    auto coarse = project_stationary(fine, pi, {1, 2, 2});
    REQUIRE_EQ(coarse.size(), 3u);
    Rat total(0);
    for (auto& [state, mass] : coarse) total += mass;
    CHECK_EQ(total, Rat(1));
}
