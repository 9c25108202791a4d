#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alcove/chain.hpp"
#include "alcove/perm.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// ---------------------------------------------------------------------------
// rays in the affine symmetric group's alcove geometry
// ---------------------------------------------------------------------------

// Starting point and direction of a light beam. The beam lives in the sum-zero
// hyperplane of R^n; it starts at z0 in the interior of the fundamental alcove
// { x_1 > ... > x_n, x_1 - x_n < 1 } and travels along the integer vector eta.
struct RayConfig {
    std::vector<Rat> z0;
    std::vector<long long> eta;

    // z0 = alcove_interior_point(n) for the given direction.
    static RayConfig standard(const std::vector<long long>& eta);
};

// Barycenter of the fundamental alcove, b_j = (n+1-2j)/(2n), nudged by the
// perturbation e_j = (2^{j-1} - (2^n - 1)/n) / (n 2^{n+6}). The offsets sum to
// zero and have pairwise-distinct differences (distinct powers of 2), which
// keeps the pair gaps z0_i - z0_j away from coincidences that a symmetric
// starting point would create. Genericity is still verified per direction by
// ray_word; this constant just makes failures unlikely, not impossible.
std::vector<Rat> alcove_interior_point(int n);

// The direction (1, ..., 1, -(n-1)) whose billiard word is the Coxeter element
// s_{n-1} ... s_1 s_0 repeated, so the letter at time j is j mod n.
std::vector<long long> delta_direction(int n);

// Letters of the crossing word of a ray, one per hyperplane crossing, together
// with the exact crossing times and the minimal period of the letter sequence.
struct BilliardWord {
    int n = 0;
    std::vector<int> letters;   // letter of the m-th crossing, m = 0, 1, ...
    std::vector<Rat> times;     // strictly increasing crossing times
    int period = 0;             // minimal cyclic period of the letter sequence

    int letter(std::uint64_t m) const {
        return letters[static_cast<std::size_t>(m % static_cast<std::uint64_t>(period))];
    }
};

// Exact enumeration of the hyperplane crossings (z0_i - z0_j) + t (eta_i - eta_j) = k
// for t in (0, horizon], sorted by time, with each crossing's letter found by
// pulling the crossing point back through the inverse isometry of the current
// alcove and matching it against the walls of the fundamental alcove. The
// period is certified by checking that the letters over (1, 2] repeat the
// letters over (0, 1], so horizon must be at least 2. Throws
// std::invalid_argument when two crossings happen at the same time (the
// diagnostic names both hyperplanes) or when cfg is malformed.
BilliardWord ray_word(const RayConfig& cfg, int horizon);

// The hyperplane { x_i - x_j = k } (with i < j) containing the facet that the
// alcove of u faces in the direction of the given letter: the image of the
// fundamental alcove's wall under the isometry of u.
std::array<long long, 3> faced_hyperplane(const AffinePerm& u, int letter);

// ---------------------------------------------------------------------------
// trajectory simulation
// ---------------------------------------------------------------------------

// One step of a discretized trajectory: the alcove u at time M, the letter
// faced there, and whether the step taken from this state crossed (the final
// state of a simulation has crossed = false, its step never resolved).
struct TrajectoryState {
    AffinePerm u;
    std::uint64_t time = 0;
    int phase = 0;  // time mod word period
    int letter = 0;
    bool crossed = false;
};

// Random billiard trajectory driven by the crossing word of cfg: a faced
// hyperplane that was never crossed before is crossed with probability p,
// while every previously crossed hyperplane reflects. The crossed set is
// tracked exactly as (i < j, k) triples, and the simulator checks each step
// that "uncrossed" agrees with the length criterion len(s_l u) > len(u).
// Returns steps + 1 states. The Grassmannian variant additionally reflects at
// every wall { x_i - x_j = 0 } of the dominant chamber, so the trajectory
// stays in the chamber.
std::vector<TrajectoryState> simulate_rrbt(const RayConfig& cfg, const Rat& p,
                                           std::uint64_t steps, std::uint64_t seed);
std::vector<TrajectoryState> simulate_agrrbt(const RayConfig& cfg, const Rat& p,
                                             std::uint64_t steps, std::uint64_t seed);

// Reference walk: a uniformly random simple reflection is proposed each step
// and applied exactly when it increases the length. States reuse
// TrajectoryState with phase 0 and letter = the proposed reflection.
std::vector<TrajectoryState> lam_walk(int n, std::uint64_t seed, std::uint64_t steps);

// Unit vector (in doubles) along the displacement of the alcove barycenter
// from its starting position to the final state of the trajectory. Throws
// std::domain_error while the trajectory still sits in the initial alcove,
// where the displacement is zero and the direction undefined.
std::vector<double> empirical_direction(const std::vector<TrajectoryState>& traj);

// Exact distribution of the time-m alcove of the trajectory driven by `word`:
// each of the first m letters is kept independently with probability p and the
// kept subword is multiplied 0-Hecke style, so the result enumerates all 2^m
// subsets. Keys are windows. m is capped at 24.
std::map<std::vector<long long>, Rat> demazure_thinning_distribution(
    int n, const BilliardWord& word, int m, const Rat& p);

// ---------------------------------------------------------------------------
// toric projections
// ---------------------------------------------------------------------------

// Projection of the chamber-respecting trajectory to S_n x Z/NZ. State keys
// are the one-line form of w followed by the phase.
struct ToricChain {
    Chain chain;
    BilliardWord word;

    static std::vector<int> state_key(const Perm& w, int phase);
    std::size_t index_of(const Perm& w, int phase) const {
        return chain.index_of(state_key(w, phase));
    }
};

// Exact chain on S_n x Z/NZ driven by the crossing word of eta: at phase k the
// faced letter l advances the phase and left-multiplies w by sbar_l with the
// pass probability, which is p on the side of the hyperplane that the
// chamber-respecting lift would cross (length rises and the lift stays
// Grassmannian) and p*t on the other side. Orientations are derived from the
// lifts reached by search from (identity, 0); the search checks that every
// rediscovery of a state produces the same orientation and that all n!*N
// states are reached, throwing std::domain_error when the chain is reducible.
ToricChain toric_chain(const std::vector<long long>& eta, const Rat& p, const Rat& t);

// Asymptotic direction functional of the chamber-respecting trajectory: the
// sum of zeta(w, k) (e_{w^{-1}(1)} - e_{w^{-1}(n)}) over the states whose
// faced letter is 0 and whose w moves the highest root to a positive root,
// i.e. w^{-1}(1) < w^{-1}(n). Entries sum to zero.
std::vector<Rat> psi_from_zeta(const ToricChain& tc, const std::vector<Rat>& zeta);

// Probability that a trajectory shot along eta or -eta (sign chosen by a fair
// coin) settles in the chamber of w: (N/2) (zeta_eta(w^{-1} w_o, 0) +
// zeta_{-eta}(w^{-1} w_o, 0)), computed from the exact stationary solutions of
// both toric chains at t = 0. Keys are one-line forms; values sum to 1.
std::map<Tuple, Rat> chamber_probabilities(const std::vector<long long>& eta, const Rat& p);

// Variant of the delta-direction chain whose pass probability at phase i is
// scaled by the rate of the left species: p * a_{w^{-1}(i)} when
// w^{-1}(i) > w^{-1}(i+1), else 0. `rates` maps each species in [1..n] to a
// rate in (0,1]; all rates 1 recovers toric_chain(delta, p, 0).
Chain itasep_billiard_chain(int n, const Rat& p, const std::map<int, Rat>& rates);

// ---------------------------------------------------------------------------
// hyperoctahedral billiard chain
// ---------------------------------------------------------------------------

// Letters i_0, ..., i_{2n-1} = 0, 1, ..., n-1, n, n-1, ..., 1 of the
// hyperoctahedral word s_1 ... s_{n-1} s_n s_{n-1} ... s_1 s_0 read right to
// left; the word has period 2n.
std::vector<int> typec_billiard_word(int n);

// Bijection from signed stone positions +-[n] to phases Z/2nZ: h for positive
// h, h + 1 mod 2n for negative h. iota_inverse_phase inverts it.
int iota_phase(int n, int h);
int iota_inverse_phase(int n, int i);

// Billiard chain on C_n x Z/2nZ obtained from the stoned open-boundary chain
// with unit site weights by relabeling the stone position h as the phase
// iota(h). State keys are the signed site word followed by the phase.
Chain typec_billiard_chain(int n, const Rat& chi_stone, const Rat& alpha,
                           const Rat& beta, const Rat& t);

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------

// CSV rows M,window,letter,outcome for every resolved step (the trailing
// state's step never resolves and is omitted). The window field is
// space-separated.
std::string trajectory_csv(const std::vector<TrajectoryState>& traj);

// SVG picture of the n = 3 arrangement (chamber walls emphasized) and the
// trajectory polyline through the alcove barycenters. Throws for other n.
std::string trajectory_svg(const std::vector<TrajectoryState>& traj);

}  // namespace alcove
