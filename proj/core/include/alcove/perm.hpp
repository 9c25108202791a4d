#pragma once

#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Compositions, signed compositions, and one-line value tuples.
using Tuple = std::vector<int>;

// ---------------------------------------------------------------------------
// finite permutations of [1..n]
// ---------------------------------------------------------------------------

class Perm {
public:
    Perm() = default;
    explicit Perm(int n);  // identity
    static Perm from_one_line(const std::vector<int>& images);
    static Perm adjacent(int n, int i);        // s_i swaps i, i+1 (1 <= i <= n-1)
    static Perm ring_swap(int n);              // swaps n and 1, fixes the rest
    static Perm rotation(int n);               // i -> i+1 cyclically
    static Perm longest(int n);                // i -> n+1-i

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Perm operator*(const Perm& o) const;       // (u*v)(i) = u(v(i))
    Perm inverse() const;
    long inversions() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // w y = (y_{w^{-1}(1)}, ..., y_{w^{-1}(n)}): entry of y indexed by the stone/species
    // that w places on site i lands at position i.
    template <class T>
    std::vector<T> act(const std::vector<T>& y) const {
        std::vector<T> out(img_.size());
        for (std::size_t j = 0; j < img_.size(); ++j) out[img_[j] - 1] = y[j];
        return out;
    }

    std::string str() const;

    static std::vector<Perm> all(int n);       // S_n in lexicographic order

private:
    std::vector<int> img_;
};

// ---------------------------------------------------------------------------
// signed permutations (hyperoctahedral group): w(-i) = -w(i)
// ---------------------------------------------------------------------------

class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(int n);  // identity
    static SignedPerm from_one_line(const std::vector<int>& images);
    static SignedPerm adjacent(int n, int i);  // s_i, 1 <= i <= n-1
    static SignedPerm negate_last(int n);      // s_n

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const;               // defined for i in +-[n]
    const std::vector<int>& one_line() const { return img_; }

    SignedPerm operator*(const SignedPerm& o) const;
    SignedPerm inverse() const;
    long length() const;                       // positive roots e_i - e_j, e_i + e_j, 2e_i sent negative

    bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
    bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

    // Signed value-tuple action with y_{-i} = -y_i.
    Tuple act(const Tuple& y) const;

    std::string str() const;

private:
    std::vector<int> img_;
};

// ---------------------------------------------------------------------------
// affine permutations in window notation
// ---------------------------------------------------------------------------

class AffinePerm {
public:
    AffinePerm() = default;
    explicit AffinePerm(int n);  // identity
    static AffinePerm from_window(const std::vector<long long>& window);
    static AffinePerm s(int n, int i);                              // simple reflection, 0 <= i <= n-1
    static AffinePerm translation(const std::vector<long long>& eta);  // tau_eta, sum eta = 0

    int n() const { return static_cast<int>(win_.size()); }
    long long operator()(long long i) const;
    const std::vector<long long>& window() const { return win_; }

    AffinePerm operator*(const AffinePerm& o) const;   // (u*v)(i) = u(v(i))
    AffinePerm inverse() const;
    AffinePerm left_mul_s(int i) const;                // s_i * this, O(n)
    long long length() const;
    bool left_ascent(int i) const;                     // length(s_i w) > length(w)
    bool right_descent(int i) const;                   // length(w s_i) < length(w)

    Perm finite_part() const;                          // w-bar with values in [1..n]
    std::vector<long long> translation_part() const;   // eta with w = w-bar tau_eta
    bool is_grassmannian() const;                      // window increasing: alcove in the dominant chamber

    // Right action on points of the weight space (sum-zero coordinates):
    // (gamma . w)_j = gamma_{r_j} - q_j where w(j) = r_j + n q_j, r_j in [1..n].
    std::vector<Rat> act(const std::vector<Rat>& gamma) const;

    bool operator==(const AffinePerm& o) const { return win_ == o.win_; }
    bool operator<(const AffinePerm& o) const { return win_ < o.win_; }

    std::string str() const;

private:
    std::vector<long long> win_;
};

// 0-Hecke product of the word (letters applied first-to-last): y <- s_k y whenever the
// length rises, otherwise the letter is dropped.
AffinePerm demazure_product(int n, const std::vector<int>& word);

// ---------------------------------------------------------------------------
// compositions and rearrangement classes
// ---------------------------------------------------------------------------

// All distinct rearrangements of lambda, sorted lexicographically.
std::vector<Tuple> rearrangement_class(const Tuple& lambda);

// All distinct tuples whose entrywise absolute values rearrange lambda, sorted.
std::vector<Tuple> signed_rearrangement_class(const Tuple& lambda);

// Type-A ring swap at i in Z/nZ: swaps entries (i, i+1), with i = 0 acting on (n, 1).
Tuple apply_sbar_ring(int i, const Tuple& mu);

// Type-C generator at i in {0,...,n}: i = 0 negates entry 1, i = n negates entry n,
// otherwise swaps entries (i, i+1).
Tuple apply_sbar_typec(int i, const Tuple& mu);

Tuple cycle_tuple(const Tuple& mu);  // c mu = (mu_n, mu_1, ..., mu_{n-1})

void require_nondecreasing(const Tuple& lambda, const char* what);

// ---------------------------------------------------------------------------
// stone systems
// ---------------------------------------------------------------------------

// Density map for n stones: nondecreasing, first entry 1, surjective onto [1..m].
class StoneSystem {
public:
    explicit StoneSystem(Tuple density);

    int n() const { return static_cast<int>(density_.size()); }
    int m() const { return m_; }
    const Tuple& density() const { return density_; }
    int density_of(int stone) const { return density_[stone - 1]; }

    // sigma places stone j on site sigma(j); admissible iff each density class keeps
    // its cyclic order along the sites.
    bool admissible(const Perm& sigma) const;
    std::vector<Perm> omega() const;               // all admissible placements, sorted
    int crossing_count(const Perm& sigma) const;   // indices i with density rising from site i to i+1 (cyclic)
    Tuple site_densities(const Perm& sigma) const; // density of the stone on each site

private:
    Tuple density_;
    int m_ = 0;
};

}  // namespace alcove
