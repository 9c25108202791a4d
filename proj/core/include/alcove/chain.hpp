#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alcove/perm.hpp"
#include "alcove/rational.hpp"
#include "alcove/rng.hpp"

namespace alcove {

// Finite Markov chain with exact rational transition probabilities. States carry an
// integer-vector key; the canonical state order is lexicographic on those keys.
class Chain {
public:
    struct Edge {
        std::size_t dst;
        Rat prob;
    };

    std::size_t size() const { return keys_.size(); }
    const std::vector<int>& key(std::size_t i) const { return keys_[i]; }
    std::string label(std::size_t i) const;
    std::size_t index_of(const std::vector<int>& key) const;  // throws if unknown
    bool has_state(const std::vector<int>& key) const;

    // Off-diagonal transitions (dst != src); the diagonal holds the lazy remainder.
    const std::vector<Edge>& row(std::size_t i) const { return rows_[i]; }
    Rat hold_probability(std::size_t i) const;

    bool irreducible() const;  // strong connectivity of the positive-probability digraph

    // Unique solution of pi P = pi, sum pi = 1. Throws std::domain_error when the
    // chain is reducible (and std::logic_error if the solve degenerates anyway).
    std::vector<Rat> stationary_exact() const;

    // Exact balance check for a claimed stationary measure (unnormalized allowed).
    bool is_stationary(const std::vector<Rat>& pi) const;

    using Trajectory = std::vector<std::uint32_t>;
    Trajectory simulate(Rng& rng, std::size_t start, std::uint64_t steps) const;
    std::vector<double> empirical(const Trajectory& traj, std::uint64_t burn_in) const;

    // CSV edge list: src,dst,probability_exact,probability_float.
    std::string edge_list_csv() const;

private:
    friend class ChainBuilder;
    std::vector<std::vector<int>> keys_;
    std::vector<std::vector<Edge>> rows_;
    std::map<std::vector<int>, std::size_t> index_;
};

double tv_distance(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> to_doubles(const std::vector<Rat>& pi);

// Accumulates states and transitions in any order, then produces a Chain with states
// sorted canonically and row sums validated to be at most 1 (the remainder is lazy).
class ChainBuilder {
public:
    void add_state(const std::vector<int>& key);
    void add_transition(const std::vector<int>& src, const std::vector<int>& dst, const Rat& prob);
    Chain finalize() const;

private:
    std::map<std::vector<int>, std::map<std::vector<int>, Rat>> acc_;
};

// ---------------------------------------------------------------------------
// chain constructors
// ---------------------------------------------------------------------------

// Multispecies ring ASEP on the rearrangement class of lambda: site pair (i, i+1) is
// chosen uniformly among the n ring edges, and the swap fires with probability
// f_t(mu_i, mu_{i+1}) = 1, t, or 0 for falling, rising, or equal species pairs.
Chain masep_chain(const Tuple& lambda, const Rat& t);

// Auxiliary TASEP on the admissible stone placements of rho.
Chain aux_tasep_chain(const StoneSystem& stones);

// Stoned multispecies ASEP on pairs (mu, sigma). State key = mu followed by sigma's
// one-line form. chi must make every cross-density p(j,j') land in [0,1), with at
// least one positive.
Chain stoned_masep_chain(const Tuple& lambda, const StoneSystem& stones,
                         const std::vector<Rat>& chi, const Rat& t);

// Signal probability p(j,j') = (chi_j - chi_{j'}) / (t chi_j - chi_{j'}).
Rat stone_signal_probability(const Rat& chi_j, const Rat& chi_jp, const Rat& t);

// Inhomogeneous TASEP: species k hops over a smaller right neighbor with rate a(k).
// `rates` maps each species value appearing in lambda to a rate in (0,1).
Chain itasep_chain(const Tuple& lambda, const std::map<int, Rat>& rates);

// Stoned inhomogeneous TASEP (two stone densities). p maps density-1 stone indices to
// signal probabilities in [0,1), not all zero.
Chain stoned_itasep_chain(const Tuple& lambda, const StoneSystem& stones,
                          const std::map<int, Rat>& p, const std::map<int, Rat>& rates);

// Open-boundary multispecies ASEP on the signed rearrangement class: interior swaps as
// in the ring chain, boundary sign flips with rates alpha (site 1) and beta (site n).
Chain obasep_chain(const Tuple& lambda, const Rat& alpha, const Rat& beta, const Rat& t);

// Deterministic stone move for the open-boundary chain: +1,...,+n,-n,...,-1 cyclically.
int aux_cyclic_shift(int n, int h);

// Swap eagerness between adjacent species: 1 when left > right, t when left < right,
// 0 on a tie. Shared by the ring, open-boundary, and inhomogeneous chains.
Rat swap_weight(int left, int right, const Rat& t);

// Stoned open-boundary ASEP on (mu, h) with h in +-[n] encoding the stone's site and
// orientation. chi has n-1 site weights; chi_stone is the stone's own weight.
Chain stoned_obasep_chain(const Tuple& lambda, const std::vector<Rat>& chi,
                          const Rat& chi_stone, const Rat& alpha, const Rat& beta,
                          const Rat& t);

// Pushforward of a distribution on the states of `fine` along the species coarsening
// that relabels species v as lambda'_v: the first n key entries map entrywise through
// lambda_coarse, any trailing entries (a stone placement) pass through unchanged.
// Returns pairs (coarse state, mass).
std::vector<std::pair<Tuple, Rat>> project_stationary(const Chain& fine,
                                                      const std::vector<Rat>& pi,
                                                      const Tuple& lambda_coarse);

}  // namespace alcove
