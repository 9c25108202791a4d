#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/perm.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Exponent vector of a Laurent monomial; entry k is the power of x_{k+1}.
using Expo = std::vector<int>;

// Graded lexicographic, highest first: larger total degree wins, then lex on exponents.
// Multiplicative (order of m1*m < m2*m follows m1 < m2), which long division needs.
struct GradedLexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Multivariate Laurent polynomial with exact rational coefficients. Terms are kept in
// graded-lex order (leading term first), which doubles as the canonical serialization
// order. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Expo, Rat, GradedLexGreater>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly monomial(Expo e, const Rat& c);
    static Poly var(int nvars, int i, int power = 1);  // x_i^power, i is 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Expo& e) const;
    void add_term(const Expo& e, const Rat& c);  // accumulates, erases cancellations

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly swap_vars(int i, int j) const;     // 1-based
    Poly invert_var(int i) const;           // x_i -> x_i^{-1}
    Poly rotate_vars() const;               // f(x_1,...,x_n) -> f(x_n, x_1, ..., x_{n-1})
    Poly permute_vars(const Perm& w) const; // argument i of f receives x_{w^{-1}(i)}

    // Throws std::domain_error when a negative power of zero would be needed.
    Rat eval(const std::vector<Rat>& x) const;

    // Evaluation where entries marked symbolic stand for a common indeterminate;
    // returns the resulting univariate polynomial as power -> coefficient.
    std::map<long, Rat> eval_symbolic(const std::vector<Rat>& x,
                                      const std::vector<bool>& symbolic) const;

    long degree() const;                     // max total degree, 0 for the zero polynomial
    bool is_homogeneous(long* deg_out = nullptr) const;
    const Expo& leading_exponent() const;    // throws std::domain_error on zero
    int min_exponent(int i) const;           // over all terms, 0 if zero polynomial
    int max_exponent(int i) const;

    // Canonical text form, e.g. "x1^2*x2 - 1/2*x3 + 4". Used in CSV and logs.
    std::string str() const;

private:
    int nvars_ = 0;
    TermMap terms_;

    void check_same_ring(const Poly& o) const;
};

// Exact division p / q for monomial or binomial q (all divisors in this project are of
// that shape). Throws std::domain_error if q has another shape or does not divide p.
Poly divide_exact(const Poly& p, const Poly& q);

// Coefficient of the highest power of x_i in f, as a polynomial with x_i cleared.
// Zero polynomial in, zero polynomial out.
Poly leading_part_in(const Poly& f, int i);

// True when f is invariant under every adjacent variable swap.
bool is_symmetric(const Poly& f);

// ---------------------------------------------------------------------------
// Hecke operators
// ---------------------------------------------------------------------------

// Type A ring operator T_i = t - ((t x_a - x_b)/(x_a - x_b))(1 - swap_ab), where
// (a,b) = (i, i+1) for 1 <= i <= n-1 and (a,b) = (n, 1) for i = 0.
Poly hecke_t(const Poly& f, int i, const Rat& t);

// Inhomogeneous exchange operator sending Psi_mu to Psi_{sbar_i mu} on ascents:
// (x_a (x_b - a_v) / (a_v (x_a - x_b))) (1 - swap_ab) f, with a_v the rate of the
// species entering from the right.
Poly itasep_exchange(const Poly& f, int i, const Rat& species_rate);

// Type C boundary operators (involutions).
Poly hecke_t0(const Poly& f, const Rat& alpha, const Rat& t);
Poly hecke_tn(const Poly& f, const Rat& beta, const Rat& t);

}  // namespace alcove
