#include "alcove/hecke.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "alcove/perm.hpp"

namespace alcove {

namespace {

std::string tuple_label(const Tuple& mu) {
    std::ostringstream out;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        if (k) out << ',';
        out << mu[k];
    }
    return out.str();
}

// Ring pair of 1-based variable positions for index i in Z/nZ.
std::pair<int, int> ring_pair(int i, int n) {
    if (i == 0) return {n, 1};
    return {i, i + 1};
}

// Reduced row echelon form over the rationals, built one homogeneous row at a time.
// A stopping instance ignores further rows once the kernel is one-dimensional; a
// non-stopping instance absorbs every row so the final kernel dimension is exact.
class Rref {
public:
    explicit Rref(std::size_t cols, bool stop_when_pinned = true)
        : cols_(cols), stop_when_pinned_(stop_when_pinned) {}

    void add_row(std::vector<Rat> row) {
        if (saturated()) return;
        for (const auto& [pivot, reduced] : rows_) {
            if (row[pivot] == 0) continue;
            Rat factor = row[pivot];
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= factor * reduced[j];
        }
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (row[j] != 0) {
                lead = j;
                break;
            }
        }
        if (lead == cols_) return;
        Rat inv = row[lead];
        for (std::size_t j = 0; j < cols_; ++j) row[j] /= inv;
        for (auto& [pivot, reduced] : rows_) {
            if (reduced[lead] == 0) continue;
            Rat factor = reduced[lead];
            for (std::size_t j = 0; j < cols_; ++j) reduced[j] -= factor * row[j];
        }
        rows_.emplace(lead, std::move(row));
    }

    std::size_t rank() const { return rows_.size(); }
    bool pinned() const { return rank() + 1 >= cols_; }
    bool saturated() const { return stop_when_pinned_ && pinned(); }

    // The kernel vector, unique up to scale once rank == cols - 1.
    std::vector<Rat> kernel() const {
        if (rank() + 1 != cols_) throw std::logic_error("family solver: kernel at wrong rank");
        return kernel_basis().front();
    }

    // One kernel vector per free column, in column order.
    std::vector<std::vector<Rat>> kernel_basis() const {
        std::vector<std::vector<Rat>> out;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (rows_.count(j)) continue;
            std::vector<Rat> v(cols_, Rat(0));
            v[j] = 1;
            for (const auto& [pivot, reduced] : rows_) v[pivot] = -reduced[j];
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t cols_;
    bool stop_when_pinned_;
    std::map<std::size_t, std::vector<Rat>> rows_;
};

// Columns of one family member: member = sum_j c_j * cols[j] over the unknowns c.
using Columns = std::vector<Poly>;

// Rows of "sum_j c_j (lhs_j - rhs_j) = 0", one per monomial, fed in graded-lex order.
void emit_equality(Rref& rref, const Columns& lhs, const Columns& rhs) {
    if (rref.saturated()) return;
    std::map<Expo, std::vector<Rat>, GradedLexGreater> rows;
    for (std::size_t j = 0; j < lhs.size(); ++j) {
        Poly diff = lhs[j] - rhs[j];
        for (const auto& [e, c] : diff.terms()) {
            auto it = rows.try_emplace(e, std::vector<Rat>(lhs.size(), Rat(0))).first;
            it->second[j] = c;
        }
    }
    for (auto& [e, row] : rows) {
        rref.add_row(std::move(row));
        if (rref.saturated()) return;
    }
}

void append_homogeneous(Expo& cur, std::size_t pos, int rem, std::vector<Expo>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
    }
    for (int e = rem; e >= 0; --e) {
        cur[pos] = e;
        append_homogeneous(cur, pos + 1, rem - e, out);
    }
}

// Nonnegative exponent tuples of total degree exactly d, graded-lex order.
std::vector<Expo> homogeneous_basis(int n, int d) {
    std::vector<Expo> out;
    Expo cur(n, 0);
    append_homogeneous(cur, 0, d, out);
    return out;
}

// Nonnegative exponent tuples of total degree at most d, graded-lex order.
std::vector<Expo> degree_le_basis(int n, int d) {
    std::vector<Expo> out;
    for (int k = d; k >= 0; --k) {
        std::vector<Expo> layer = homogeneous_basis(n, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// True when the absolute exponents of e, sorted downward, have partial sums bounded
// by the corresponding partial sums of the parts of lambda sorted downward.
bool exponent_dominated(const Expo& e, const Tuple& lambda) {
    std::vector<int> a(e.size()), b(lambda.size());
    for (std::size_t k = 0; k < e.size(); ++k) a[k] = std::abs(e[k]);
    for (std::size_t k = 0; k < lambda.size(); ++k) b[k] = std::abs(lambda[k]);
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    int sum_a = 0, sum_b = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sum_a += a[k];
        sum_b += b[k];
        if (sum_a > sum_b) return false;
    }
    return true;
}

// Laurent exponent tuples dominated by lambda, every entry within [-max part, max part].
std::vector<Expo> dominated_basis(int n, const Tuple& lambda) {
    const int bound = lambda.back();
    std::vector<Expo> out;
    Expo cur(n, 0);
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(2 * bound + 1);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (int k = 0; k < n; ++k) {
            cur[k] = static_cast<int>(rest % (2 * bound + 1)) - bound;
            rest /= 2 * bound + 1;
        }
        if (exponent_dominated(cur, lambda)) out.push_back(cur);
    }
    return out;
}

// Grading for Laurent monomials: larger total absolute exponent first, then lex.
struct AbsGradedLexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int v : a) da += std::abs(v);
        for (int v : b) db += std::abs(v);
        if (da != db) return da > db;
        return a > b;
    }
};

// Canonical direction in a multi-dimensional kernel: run elimination with the
// largest monomials first and keep the direction whose leading monomial is smallest.
std::vector<Rat> minimal_direction(std::vector<std::vector<Rat>> kernel,
                                   const std::vector<Expo>& basis) {
    std::vector<std::size_t> order(basis.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return AbsGradedLexGreater()(basis[a], basis[b]);
    });
    std::size_t filled = 0;
    for (std::size_t pos = 0; pos < order.size() && filled < kernel.size(); ++pos) {
        const std::size_t col = order[pos];
        std::size_t pick = filled;
        while (pick < kernel.size() && kernel[pick][col] == 0) ++pick;
        if (pick == kernel.size()) continue;
        std::swap(kernel[filled], kernel[pick]);
        Rat inv = kernel[filled][col];
        for (Rat& x : kernel[filled]) x /= inv;
        for (std::size_t r = 0; r < kernel.size(); ++r) {
            if (r == filled || kernel[r][col] == 0) continue;
            Rat factor = kernel[r][col];
            for (std::size_t j = 0; j < kernel[r].size(); ++j)
                kernel[r][j] -= factor * kernel[filled][j];
        }
        ++filled;
    }
    return kernel[filled - 1];
}

Columns monomial_columns(int n, const std::vector<Expo>& basis) {
    Columns cols;
    cols.reserve(basis.size());
    for (const Expo& e : basis) cols.push_back(Poly::monomial(e, Rat(1)));
    return cols;
}

Poly assemble(int n, const Columns& cols, const std::vector<Rat>& coeffs) {
    Poly out(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (coeffs[j] != 0) out += cols[j] * coeffs[j];
    }
    return out;
}

void check_f_preconditions(const Tuple& lambda, const Rat& t) {
    if (lambda.size() < 2) throw std::invalid_argument("family: need at least two sites");
    require_nondecreasing(lambda, "family composition");
    if (lambda.front() < 0) throw std::invalid_argument("family: negative part");
    if (t < 0 || t >= 1) throw std::invalid_argument("family: t outside [0,1)");
}

Expo f_normalization_exponent(const Tuple& lambda) {
    Expo e(lambda.size());
    for (std::size_t k = 0; k < lambda.size(); ++k) e[k] = lambda.back() - lambda[k];
    return e;
}

long f_degree(const Tuple& lambda) {
    long total = 0;
    for (int part : lambda) total += part;
    return static_cast<long>(lambda.size()) * lambda.back() - total;
}

// Shared propagation for the type-A families: BFS over ring-ascent edges from the
// nondecreasing root, applying op(column, ring index, source tuple) along each edge.
template <typename Op>
std::map<Tuple, Columns> propagate_ring(const Tuple& lambda, const Columns& root,
                                        const Op& op,
                                        std::vector<std::pair<Tuple, int>>& ascents) {
    const int n = static_cast<int>(lambda.size());
    std::map<Tuple, Columns> cols;
    cols.emplace(lambda, root);
    std::deque<Tuple> queue{lambda};
    while (!queue.empty()) {
        Tuple nu = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            auto [a, b] = ring_pair(i, n);
            if (nu[a - 1] >= nu[b - 1]) continue;
            ascents.emplace_back(nu, i);
            Tuple target = apply_sbar_ring(i, nu);
            if (cols.count(target)) continue;
            const Columns& src = cols.at(nu);
            Columns next;
            next.reserve(src.size());
            for (const Poly& col : src) next.push_back(op(col, i, nu));
            cols.emplace(std::move(target), std::move(next));
            queue.push_back(apply_sbar_ring(i, nu));
        }
    }
    if (cols.size() != rearrangement_class(lambda).size())
        throw std::logic_error("family solver: ascent graph missed members");
    return cols;
}

// Constraints shared by the type-A families: rotation covariance for every member,
// then every ascent relation, then every plateau relation. Tree edges re-emit as
// all-zero rows and cost nothing.
template <typename Op>
void emit_ring_constraints(Rref& rref, const std::map<Tuple, Columns>& cols,
                           const std::vector<std::pair<Tuple, int>>& ascents,
                           const Op& op) {
    const int n = static_cast<int>(cols.begin()->first.size());
    for (const auto& [mu, own] : cols) {
        if (rref.saturated()) return;
        const Columns& src = cols.at(cycle_tuple(mu));
        Columns rotated;
        rotated.reserve(src.size());
        for (const Poly& col : src) rotated.push_back(col.rotate_vars());
        emit_equality(rref, rotated, own);
    }
    for (const auto& [nu, i] : ascents) {
        if (rref.saturated()) return;
        const Columns& src = cols.at(nu);
        Columns mapped;
        mapped.reserve(src.size());
        for (const Poly& col : src) mapped.push_back(op(col, i, nu));
        emit_equality(rref, mapped, cols.at(apply_sbar_ring(i, nu)));
    }
    for (const auto& [mu, own] : cols) {
        for (int i = 0; i < n; ++i) {
            if (rref.saturated()) return;
            auto [a, b] = ring_pair(i, n);
            if (mu[a - 1] != mu[b - 1]) continue;
            Columns swapped;
            swapped.reserve(own.size());
            for (const Poly& col : own) swapped.push_back(col.swap_vars(a, b));
            emit_equality(rref, swapped, own);
        }
    }
}

std::map<Tuple, Poly> assemble_family(const std::map<Tuple, Columns>& cols,
                                      const std::vector<Rat>& coeffs, int n) {
    std::map<Tuple, Poly> members;
    for (const auto& [mu, cs] : cols) members.emplace(mu, assemble(n, cs, coeffs));
    return members;
}

void scale_members(std::map<Tuple, Poly>& members, const Rat& factor) {
    for (auto& [mu, f] : members) f = f * factor;
}

// Lexicographically largest exponent among the terms of a nonzero polynomial.
Expo lex_largest_exponent(const Poly& f) {
    Expo best = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms()) {
        if (e > best) best = e;
    }
    return best;
}

std::optional<std::pair<long, Rat>> symbolic_lead(const std::map<long, Rat>& poly) {
    std::optional<std::pair<long, Rat>> best;
    for (const auto& [power, coeff] : poly) {
        if (coeff == 0) continue;
        if (!best || power > best->first) best = {power, coeff};
    }
    return best;
}

}  // namespace

const Poly& PolyFamily::at(const Tuple& mu) const {
    auto it = members.find(mu);
    if (it == members.end())
        throw std::out_of_range("family has no member " + tuple_label(mu));
    return it->second;
}

Poly PolyFamily::sum() const {
    if (members.empty()) throw std::logic_error("family sum: empty family");
    Poly total(members.begin()->second.nvars());
    for (const auto& [mu, f] : members) total += f;
    return total;
}

Poly f_exchange_residual(const PolyFamily& fam) {
    const Rat& t = fam.params.at("t");
    const int n = static_cast<int>(fam.lambda.size());
    for (const auto& [mu, f] : fam.members) {
        for (int i = 0; i < n; ++i) {
            auto [a, b] = ring_pair(i, n);
            if (mu[a - 1] < mu[b - 1]) {
                Poly r = hecke_t(f, i, t) - fam.at(apply_sbar_ring(i, mu));
                if (!r.is_zero()) return r;
            } else if (mu[a - 1] == mu[b - 1]) {
                Poly r = f.swap_vars(a, b) - f;
                if (!r.is_zero()) return r;
            }
        }
        Poly r = fam.at(cycle_tuple(mu)).rotate_vars() - f;
        if (!r.is_zero()) return r;
    }
    return Poly(n);
}

Poly psi_exchange_residual(const PolyFamily& fam) {
    const int n = static_cast<int>(fam.lambda.size());
    for (const auto& [mu, f] : fam.members) {
        for (int i = 0; i < n; ++i) {
            auto [a, b] = ring_pair(i, n);
            if (mu[a - 1] < mu[b - 1]) {
                const Rat& rate = fam.params.at("a" + std::to_string(mu[b - 1]));
                Poly r = itasep_exchange(f, i, rate) - fam.at(apply_sbar_ring(i, mu));
                if (!r.is_zero()) return r;
            } else if (mu[a - 1] == mu[b - 1]) {
                Poly r = f.swap_vars(a, b) - f;
                if (!r.is_zero()) return r;
            }
        }
        Poly r = fam.at(cycle_tuple(mu)).rotate_vars() - f;
        if (!r.is_zero()) return r;
    }
    return Poly(n);
}

Poly g_exchange_residual(const PolyFamily& fam) {
    const Rat& alpha = fam.params.at("alpha");
    const Rat& beta = fam.params.at("beta");
    const Rat& t = fam.params.at("t");
    const int n = static_cast<int>(fam.lambda.size());
    for (const auto& [mu, g] : fam.members) {
        Poly r0 = hecke_t0(g, alpha, t) - fam.at(apply_sbar_typec(0, mu));
        if (!r0.is_zero()) return r0;
        Poly rn = hecke_tn(g, beta, t) - fam.at(apply_sbar_typec(n, mu));
        if (!rn.is_zero()) return rn;
        for (int i = 1; i < n; ++i) {
            if (mu[i - 1] < mu[i]) {
                Poly r = hecke_t(g, i, t) - fam.at(apply_sbar_typec(i, mu));
                if (!r.is_zero()) return r;
            } else if (mu[i - 1] == mu[i]) {
                Poly r = g.swap_vars(i, i + 1) - g;
                if (!r.is_zero()) return r;
            }
        }
    }
    return Poly(n);
}

PolyFamily build_f_family_full(const Tuple& lambda, const Rat& t) {
    check_f_preconditions(lambda, t);
    const int n = static_cast<int>(lambda.size());
    const std::vector<Expo> basis = homogeneous_basis(n, static_cast<int>(f_degree(lambda)));
    const std::size_t width = basis.size();
    std::map<Expo, std::size_t, GradedLexGreater> mono_index;
    for (std::size_t j = 0; j < width; ++j) mono_index.emplace(basis[j], j);

    const std::vector<Tuple> member_list = rearrangement_class(lambda);
    std::map<Tuple, std::size_t> offset;
    for (std::size_t m = 0; m < member_list.size(); ++m)
        offset.emplace(member_list[m], m * width);
    const std::size_t total = member_list.size() * width;

    std::vector<std::vector<Poly>> images(n);
    for (int i = 0; i < n; ++i) {
        images[i].reserve(width);
        for (const Expo& e : basis) images[i].push_back(hecke_t(Poly::monomial(e, Rat(1)), i, t));
    }

    Rref rref(total);
    auto feed_block = [&](const std::map<Expo, std::vector<Rat>, GradedLexGreater>& rows) {
        for (const auto& [e, row] : rows) {
            rref.add_row(row);
            if (rref.saturated()) return;
        }
    };

    for (const Tuple& mu : member_list) {
        if (rref.saturated()) break;
        const std::size_t off_mu = offset.at(mu);
        const std::size_t off_rot = offset.at(cycle_tuple(mu));
        std::map<Expo, std::vector<Rat>, GradedLexGreater> rows;
        for (std::size_t j = 0; j < width; ++j) {
            Expo rotated = Poly::monomial(basis[j], Rat(1)).rotate_vars().leading_exponent();
            auto it = rows.try_emplace(rotated, std::vector<Rat>(total, Rat(0))).first;
            it->second[off_rot + j] += 1;
            it = rows.try_emplace(basis[j], std::vector<Rat>(total, Rat(0))).first;
            it->second[off_mu + j] -= 1;
        }
        feed_block(rows);
    }
    for (const Tuple& mu : member_list) {
        for (int i = 0; i < n; ++i) {
            if (rref.saturated()) break;
            auto [a, b] = ring_pair(i, n);
            std::map<Expo, std::vector<Rat>, GradedLexGreater> rows;
            if (mu[a - 1] < mu[b - 1]) {
                const std::size_t off_mu = offset.at(mu);
                const std::size_t off_tgt = offset.at(apply_sbar_ring(i, mu));
                for (std::size_t j = 0; j < width; ++j) {
                    for (const auto& [e, c] : images[i][j].terms()) {
                        auto it = rows.try_emplace(e, std::vector<Rat>(total, Rat(0))).first;
                        it->second[off_mu + j] += c;
                    }
                    auto it = rows.try_emplace(basis[j], std::vector<Rat>(total, Rat(0))).first;
                    it->second[off_tgt + j] -= 1;
                }
            } else if (mu[a - 1] == mu[b - 1]) {
                const std::size_t off_mu = offset.at(mu);
                for (std::size_t j = 0; j < width; ++j) {
                    Expo swapped = basis[j];
                    std::swap(swapped[a - 1], swapped[b - 1]);
                    auto it = rows.try_emplace(swapped, std::vector<Rat>(total, Rat(0))).first;
                    it->second[off_mu + j] += 1;
                    it = rows.try_emplace(basis[j], std::vector<Rat>(total, Rat(0))).first;
                    it->second[off_mu + j] -= 1;
                }
            } else {
                continue;
            }
            feed_block(rows);
        }
        if (rref.saturated()) break;
    }

    if (rref.rank() + 1 != total)
        throw std::logic_error("asep family: simultaneous system is singular");
    std::vector<Rat> solution = rref.kernel();

    PolyFamily fam;
    fam.lambda = lambda;
    fam.params.emplace("t", t);
    for (const Tuple& mu : member_list) {
        Poly f(n);
        const std::size_t off = offset.at(mu);
        for (std::size_t j = 0; j < width; ++j) {
            if (solution[off + j] != 0) f.add_term(basis[j], solution[off + j]);
        }
        fam.members.emplace(mu, std::move(f));
    }
    Rat norm = fam.at(lambda).coeff(f_normalization_exponent(lambda));
    if (norm == 0) throw std::logic_error("asep family: normalization coefficient vanished");
    scale_members(fam.members, 1 / norm);

    Poly residual = f_exchange_residual(fam);
    if (!residual.is_zero())
        throw std::logic_error("asep family: simultaneous solve violates an exchange relation");
    return fam;
}

PolyFamily build_f_family(const Tuple& lambda, const Rat& t) {
    check_f_preconditions(lambda, t);
    const int n = static_cast<int>(lambda.size());
    const std::vector<Expo> basis = homogeneous_basis(n, static_cast<int>(f_degree(lambda)));
    auto op = [&t](const Poly& col, int i, const Tuple&) { return hecke_t(col, i, t); };

    std::vector<std::pair<Tuple, int>> ascents;
    std::map<Tuple, Columns> cols = propagate_ring(lambda, monomial_columns(n, basis), op, ascents);

    Rref rref(basis.size());
    emit_ring_constraints(rref, cols, ascents, op);
    if (rref.rank() + 1 == basis.size()) {
        PolyFamily fam;
        fam.lambda = lambda;
        fam.params.emplace("t", t);
        fam.members = assemble_family(cols, rref.kernel(), n);
        Rat norm = fam.at(lambda).coeff(f_normalization_exponent(lambda));
        if (norm != 0) {
            scale_members(fam.members, 1 / norm);
            if (f_exchange_residual(fam).is_zero()) return fam;
        }
    }
    return build_f_family_full(lambda, t);
}

PolyFamily build_psi_family(const Tuple& lambda, const std::map<int, Rat>& rates) {
    if (lambda.size() < 2) throw std::invalid_argument("family: need at least two sites");
    require_nondecreasing(lambda, "family composition");
    if (lambda.front() < 0) throw std::invalid_argument("family: negative part");
    std::vector<int> species(lambda.begin(), lambda.end());
    species.erase(std::unique(species.begin(), species.end()), species.end());
    if (rates.size() != species.size())
        throw std::invalid_argument("inhomogeneous tasep family: rate count mismatch");
    for (int k : species) {
        auto it = rates.find(k);
        if (it == rates.end())
            throw std::invalid_argument("inhomogeneous tasep family: missing rate for species " +
                                        std::to_string(k));
        if (it->second <= 0 || it->second >= 1)
            throw std::invalid_argument("inhomogeneous tasep family: rate outside (0,1)");
    }

    const int n = static_cast<int>(lambda.size());
    auto op = [&rates, n](const Poly& col, int i, const Tuple& nu) {
        auto [a, b] = ring_pair(i, n);
        (void)a;
        return itasep_exchange(col, i, rates.at(nu[b - 1]));
    };

    long total = 0;
    for (int part : lambda) total += part;
    const long cap = total + n;
    for (long degree = 0; degree <= cap; ++degree) {
        const std::vector<Expo> basis = degree_le_basis(n, static_cast<int>(degree));
        std::vector<std::pair<Tuple, int>> ascents;
        std::map<Tuple, Columns> cols =
            propagate_ring(lambda, monomial_columns(n, basis), op, ascents);
        Rref rref(basis.size());
        emit_ring_constraints(rref, cols, ascents, op);
        if (rref.rank() + 1 != basis.size()) continue;

        PolyFamily fam;
        fam.lambda = lambda;
        for (int k : species) fam.params.emplace("a" + std::to_string(k), rates.at(k));
        fam.members = assemble_family(cols, rref.kernel(), n);
        const Poly& root = fam.at(lambda);
        if (root.is_zero()) continue;
        scale_members(fam.members, 1 / root.coeff(lex_largest_exponent(root)));
        if (psi_exchange_residual(fam).is_zero()) return fam;
    }
    throw std::logic_error("inhomogeneous tasep family: no solution within the degree cap");
}

PolyFamily build_g_family(const Tuple& lambda, const Rat& alpha, const Rat& beta,
                          const Rat& t) {
    if (lambda.size() < 2) throw std::invalid_argument("family: need at least two sites");
    require_nondecreasing(lambda, "family composition");
    if (lambda.front() < 0) throw std::invalid_argument("family: negative part");
    if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1)
        throw std::invalid_argument("open boundary family: boundary rate outside (0,1)");
    if (t < 0 || t >= 1) throw std::invalid_argument("family: t outside [0,1)");

    const int n = static_cast<int>(lambda.size());
    const std::vector<Expo> basis = dominated_basis(n, lambda);
    const std::vector<Tuple> member_list = signed_rearrangement_class(lambda);

    auto apply_edge = [&](const Poly& col, int i) {
        if (i == 0) return hecke_t0(col, alpha, t);
        if (i == n) return hecke_tn(col, beta, t);
        return hecke_t(col, i, t);
    };

    std::map<Tuple, Columns> cols;
    cols.emplace(lambda, monomial_columns(n, basis));
    std::deque<Tuple> queue{lambda};
    std::vector<std::pair<Tuple, int>> edges;
    while (!queue.empty()) {
        Tuple nu = queue.front();
        queue.pop_front();
        for (int i = 0; i <= n; ++i) {
            if (i >= 1 && i <= n - 1 && nu[i - 1] >= nu[i]) continue;
            edges.emplace_back(nu, i);
            Tuple target = apply_sbar_typec(i, nu);
            if (cols.count(target)) continue;
            const Columns& src = cols.at(nu);
            Columns next;
            next.reserve(src.size());
            for (const Poly& col : src) next.push_back(apply_edge(col, i));
            cols.emplace(std::move(target), std::move(next));
            queue.push_back(apply_sbar_typec(i, nu));
        }
    }
    if (cols.size() != member_list.size())
        throw std::logic_error("open boundary family: exchange graph missed members");

    Rref rref(basis.size(), /*stop_when_pinned=*/false);
    for (const auto& [nu, i] : edges) {
        const Columns& src = cols.at(nu);
        Columns mapped;
        mapped.reserve(src.size());
        for (const Poly& col : src) mapped.push_back(apply_edge(col, i));
        emit_equality(rref, mapped, cols.at(apply_sbar_typec(i, nu)));
    }
    for (const auto& [mu, own] : cols) {
        for (int i = 1; i < n; ++i) {
            if (mu[i - 1] != mu[i]) continue;
            Columns swapped;
            swapped.reserve(own.size());
            for (const Poly& col : own) swapped.push_back(col.swap_vars(i, i + 1));
            emit_equality(rref, swapped, own);
        }
    }
    const std::vector<std::vector<Rat>> kernel = rref.kernel_basis();
    if (kernel.empty())
        throw std::logic_error("open boundary family: exchange relations admit no solution");

    // The relations can leave a symmetric multiplier free. All such directions agree
    // after dividing by the family sum; keep the one with the smallest support and
    // verify the ratios are pinned by cross-multiplying against that representative.
    PolyFamily fam;
    fam.lambda = lambda;
    fam.params.emplace("alpha", alpha);
    fam.params.emplace("beta", beta);
    fam.params.emplace("t", t);
    fam.members = assemble_family(cols, minimal_direction(kernel, basis), n);
    if (kernel.size() > 1) {
        const Poly& chosen_root = fam.at(lambda);
        for (const std::vector<Rat>& direction : kernel) {
            std::map<Tuple, Poly> other = assemble_family(cols, direction, n);
            const Poly& other_root = other.at(lambda);
            for (const auto& [mu, g] : fam.members) {
                if (g * other_root != other.at(mu) * chosen_root)
                    throw std::logic_error(
                        "open boundary family: exchange relations leave the ratios free");
            }
        }
    }

    Expo target(lambda.size());
    for (std::size_t k = 0; k < lambda.size(); ++k) target[k] = lambda[lambda.size() - 1 - k];
    Rat norm = fam.at(lambda).coeff(target);
    if (norm == 0) norm = fam.at(lambda).coeff(lex_largest_exponent(fam.at(lambda)));
    scale_members(fam.members, 1 / norm);

    Poly residual = g_exchange_residual(fam);
    if (!residual.is_zero())
        throw std::logic_error("open boundary family: solve violates an exchange relation");
    for (const auto& [mu, g] : fam.members) {
        for (int v = 1; v <= n; ++v) {
            if (g.max_exponent(v) > lambda.back() || g.min_exponent(v) < -lambda.back())
                throw std::logic_error("open boundary family: support escaped the degree box");
        }
    }
    return fam;
}

Rat limit_ratio(const Poly& num, const std::vector<Rat>& xn, const std::vector<bool>& symn,
                const Poly& den, const std::vector<Rat>& xd, const std::vector<bool>& symd) {
    auto den_lead = symbolic_lead(den.eval_symbolic(xd, symd));
    if (!den_lead) throw std::domain_error("limit_ratio: denominator is identically zero");
    auto num_lead = symbolic_lead(num.eval_symbolic(xn, symn));
    if (!num_lead) return Rat(0);
    if (num_lead->first > den_lead->first)
        throw std::domain_error("limit_ratio: limit diverges");
    if (num_lead->first < den_lead->first) return Rat(0);
    return num_lead->second / den_lead->second;
}

}  // namespace alcove
