#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/poly.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// A family of Laurent polynomials indexed by the (signed) rearrangements of a
// composition, together with the parameter values it was built with. params keys
// are "t", "alpha", "beta", and "a<k>" for the rate of species k.
struct PolyFamily {
    Tuple lambda;
    std::map<Tuple, Poly> members;
    std::map<std::string, Rat> params;

    const Poly& at(const Tuple& mu) const;  // throws std::out_of_range with the label
    Poly sum() const;
    std::size_t size() const { return members.size(); }
};

// ASEP polynomials F_mu for all rearrangements mu of lambda: the unique family with
// T_i F_mu = F_{sbar_i mu} on ring ascents, sbar_i-invariance on plateaus, rotation
// covariance c F_{c mu} = F_mu, every member homogeneous of degree
// n*lambda_n - |lambda|, and the coefficient of
// x_1^{lambda_n - lambda_1} ... x_n^{lambda_n - lambda_n} in F_lambda equal to 1.
// Solves for the coefficients of F_lambda alone and propagates along ascent edges;
// falls back to the simultaneous system over all members if that route is singular.
PolyFamily build_f_family(const Tuple& lambda, const Rat& t);

// Same family, solved as one linear system over the coefficients of every member at
// once. Implemented independently of build_f_family so the two can be compared.
PolyFamily build_f_family_full(const Tuple& lambda, const Rat& t);

// Inhomogeneous TASEP polynomials Psi_mu, determined up to one common scalar by
// their exchange relations; normalized so the lexicographically largest monomial of
// Psi_lambda has coefficient 1. rates maps each species value of lambda to its rate.
PolyFamily build_psi_family(const Tuple& lambda, const std::map<int, Rat>& rates);

// Open boundary ASEP polynomials G_mu over all signed rearrangements of lambda.
// Laurent exponents live in the box [-lambda_n, lambda_n]^n. The exchange relations
// can leave a symmetric overall multiplier free; the builder returns the
// smallest-support representative after checking that every member ratio G_mu/G_nu
// is independent of that choice, so stationary quantities are unambiguous.
// Normalization puts coefficient 1 on x_1^{lambda_n} x_2^{lambda_{n-1}} ... x_n^{lambda_1}
// in G_lambda when that monomial is present, else on its lexicographically largest one.
PolyFamily build_g_family(const Tuple& lambda, const Rat& alpha, const Rat& beta,
                          const Rat& t);

// First nonzero exchange-relation residual of a family (the zero polynomial when
// every relation holds exactly). The builders enforce a zero residual before
// returning; these are exposed so callers can re-check independently.
Poly f_exchange_residual(const PolyFamily& fam);
Poly psi_exchange_residual(const PolyFamily& fam);
Poly g_exchange_residual(const PolyFamily& fam);

// lim_{R->inf} num(xn)/den(xd) where entries flagged in symn/symd are replaced by a
// common indeterminate R: zero when the numerator's R-degree is smaller, the ratio
// of leading R-coefficients when the degrees match. Throws std::domain_error when
// the limit diverges or the denominator vanishes identically.
Rat limit_ratio(const Poly& num, const std::vector<Rat>& xn, const std::vector<bool>& symn,
                const Poly& den, const std::vector<Rat>& xd, const std::vector<bool>& symd);

}  // namespace alcove
