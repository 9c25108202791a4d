#include "alcove/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alcove {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

Poly Poly::monomial(Expo e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
}

Poly Poly::var(int nvars, int i, int power) {
    if (i < 1 || i > nvars) throw std::invalid_argument("Poly::var: index out of range");
    Expo e(nvars, 0);
    e[i - 1] = power;
    return monomial(std::move(e), Rat(1));
}

Rat Poly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("Poly: exponent arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mixing different variable counts");
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    Poly out(nvars_);
    Expo e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
    return out;
}

Poly Poly::swap_vars(int i, int j) const {
    if (i < 1 || j < 1 || i > nvars_ || j > nvars_) throw std::invalid_argument("Poly::swap_vars: index out of range");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        std::swap(f[i - 1], f[j - 1]);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Poly Poly::invert_var(int i) const {
    if (i < 1 || i > nvars_) throw std::invalid_argument("Poly::invert_var: index out of range");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        f[i - 1] = -f[i - 1];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Poly Poly::rotate_vars() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo f(nvars_);
        // argument 1 receives x_n, argument k receives x_{k-1}
        f[nvars_ - 1] = e[0];
        for (int k = 1; k < nvars_; ++k) f[k - 1] = e[k];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Poly Poly::permute_vars(const Perm& w) const {
    if (w.n() != nvars_) throw std::invalid_argument("Poly::permute_vars: size mismatch");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Expo f(nvars_);
        for (int j = 1; j <= nvars_; ++j) f[j - 1] = e[w(j) - 1];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("Poly::eval: arity mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int k = 0; k < nvars_; ++k)
            if (e[k] != 0) term *= rat_pow(x[k], e[k]);
        acc += term;
    }
    return acc;
}

std::map<long, Rat> Poly::eval_symbolic(const std::vector<Rat>& x,
                                        const std::vector<bool>& symbolic) const {
    if (static_cast<int>(x.size()) != nvars_ || symbolic.size() != x.size())
        throw std::invalid_argument("Poly::eval_symbolic: arity mismatch");
    std::map<long, Rat> out;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        long power = 0;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (symbolic[k])
                power += e[k];
            else
                term *= rat_pow(x[k], e[k]);
        }
        Rat& slot = out[power];
        slot += term;
        if (slot == 0) out.erase(power);
    }
    return out;
}

long Poly::degree() const {
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int v : e) d += v;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

bool Poly::is_homogeneous(long* deg_out) const {
    long deg = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int v : e) d += v;
        if (first)
            deg = d;
        else if (d != deg)
            return false;
        first = false;
    }
    if (deg_out) *deg_out = deg;
    return true;
}

const Expo& Poly::leading_exponent() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_exponent: zero polynomial");
    return terms_.begin()->first;
}

int Poly::min_exponent(int i) const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i - 1] < best) best = e[i - 1];
        first = false;
    }
    return best;
}

int Poly::max_exponent(int i) const {
    int best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[i - 1] > best) best = e[i - 1];
        first = false;
    }
    return best;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_var = false;
        for (int v : e)
            if (v != 0) has_var = true;
        if (a != 1 || !has_var) {
            os << a.get_str();
            if (has_var) os << '*';
        }
        bool firstvar = true;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (!firstvar) os << '*';
            os << 'x' << (k + 1);
            if (e[k] != 1) os << '^' << e[k];
            firstvar = false;
        }
        first = false;
    }
    return os.str();
}

Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (p.nvars() != q.nvars()) throw std::invalid_argument("divide_exact: mixing rings");
    int n = p.nvars();

    if (q.term_count() == 1) {
        const auto& [qe, qc] = *q.terms().begin();
        Poly out(n);
        Expo f(n);
        for (const auto& [e, c] : p.terms()) {
            for (int k = 0; k < n; ++k) f[k] = e[k] - qe[k];
            out.add_term(f, c / qc);
        }
        return out;
    }
    if (q.term_count() != 2)
        throw std::domain_error("divide_exact: divisor must have one or two terms");
    if (p.is_zero()) return Poly(n);

    // Exact quotient exponents are confined to the coordinatewise box
    // [min(p) - max(q), max(p) - min(q)]; escaping it proves non-divisibility.
    Expo lo(n), hi(n);
    for (int k = 1; k <= n; ++k) {
        lo[k - 1] = p.min_exponent(k) - q.max_exponent(k);
        hi[k - 1] = p.max_exponent(k) - q.min_exponent(k);
    }

    auto it = q.terms().begin();
    const Expo& qe = it->first;  // leading term of the binomial
    Rat qc = it->second;
    ++it;
    const Expo& re = it->first;
    Rat rc = it->second;

    Poly rem = p;
    Poly out(n);
    Expo t(n), carry(n);
    while (!rem.is_zero()) {
        Expo le = rem.leading_exponent();
        Rat lc = rem.terms().begin()->second;
        for (int k = 0; k < n; ++k) {
            t[k] = le[k] - qe[k];
            if (t[k] < lo[k] || t[k] > hi[k]) throw std::domain_error("divide_exact: not divisible");
        }
        Rat coef = lc / qc;
        out.add_term(t, coef);
        // rem -= coef * x^t * q; the leading term cancels by construction
        rem.add_term(le, -lc);
        for (int k = 0; k < n; ++k) carry[k] = t[k] + re[k];
        rem.add_term(carry, -coef * rc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hecke operators
// ---------------------------------------------------------------------------

namespace {

// ring pair (a, b) for index i in Z/nZ: (i, i+1), with i = 0 wrapping to (n, 1)
std::pair<int, int> ring_pair(int i, int n) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("ring index out of range");
    return i == 0 ? std::pair<int, int>(n, 1) : std::pair<int, int>(i, i + 1);
}

}  // namespace

Poly hecke_t(const Poly& f, int i, const Rat& t) {
    auto [a, b] = ring_pair(i, f.nvars());
    Poly diff = f - f.swap_vars(a, b);
    if (diff.is_zero()) return f * t;
    Poly xa = Poly::var(f.nvars(), a), xb = Poly::var(f.nvars(), b);
    Poly quot = divide_exact(diff, xa - xb);
    return f * t - (xa * t - xb) * quot;
}

Poly itasep_exchange(const Poly& f, int i, const Rat& species_rate) {
    if (species_rate == 0) throw std::invalid_argument("itasep_exchange: zero species rate");
    auto [a, b] = ring_pair(i, f.nvars());
    Poly diff = f - f.swap_vars(a, b);
    Poly xa = Poly::var(f.nvars(), a), xb = Poly::var(f.nvars(), b);
    if (diff.is_zero()) return Poly(f.nvars());
    Poly quot = divide_exact(diff, xa - xb);
    return xa * (xb - Poly::constant(f.nvars(), species_rate)) * quot * (1 / species_rate);
}

namespace {

Poly boundary_op(const Poly& f, int var, const Rat& edge_rate, const Rat& t, bool negate) {
    if (edge_rate == 0) throw std::invalid_argument("type-C boundary operator: zero rate");
    Poly flipped = f.invert_var(var);
    Poly diff = f - flipped;
    if (diff.is_zero()) return f;
    int n = f.nvars();
    Poly x = Poly::var(n, var);
    Poly one_minus_sq = Poly::constant(n, Rat(1)) - Poly::var(n, var, 2);
    Poly quot = divide_exact(x * diff, one_minus_sq);
    Rat c = (1 - t) / edge_rate;
    if (negate) c = -c;
    return flipped + quot * c;
}

}  // namespace

Poly hecke_t0(const Poly& f, const Rat& alpha, const Rat& t) {
    return boundary_op(f, 1, alpha, t, false);
}

Poly hecke_tn(const Poly& f, const Rat& beta, const Rat& t) {
    return boundary_op(f, f.nvars(), beta, t, true);
}

Poly leading_part_in(const Poly& f, int i) {
    if (i < 1 || i > f.nvars()) throw std::invalid_argument("leading_part_in: bad variable");
    Poly out(f.nvars());
    if (f.is_zero()) return out;
    int top = f.max_exponent(i);
    for (const auto& [e, c] : f.terms()) {
        if (e[i - 1] != top) continue;
        Expo cleared = e;
        cleared[i - 1] = 0;
        out.add_term(cleared, c);
    }
    return out;
}

bool is_symmetric(const Poly& f) {
    for (int i = 1; i < f.nvars(); ++i) {
        if (f.swap_vars(i, i + 1) != f) return false;
    }
    return true;
}

}  // namespace alcove
