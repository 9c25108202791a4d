#include "alcove/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "alcove/linalg.hpp"

namespace alcove {

// ---------------------------------------------------------------------------
// Chain
// ---------------------------------------------------------------------------

std::string Chain::label(std::size_t i) const {
    std::ostringstream os;
    const std::vector<int>& k = keys_[i];
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (j) os << ',';
        os << k[j];
    }
    return os.str();
}

std::size_t Chain::index_of(const std::vector<int>& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::invalid_argument("Chain: unknown state");
    return it->second;
}

bool Chain::has_state(const std::vector<int>& key) const { return index_.count(key) != 0; }

Rat Chain::hold_probability(std::size_t i) const {
    Rat s(0);
    for (const Edge& e : rows_[i]) s += e.prob;
    return 1 - s;
}

bool Chain::irreducible() const {
    // single strongly connected component: everything reachable from 0 and 0
    // reachable from everything
    std::size_t n = size();
    if (n == 0) return false;
    std::vector<std::vector<std::size_t>> rev(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const Edge& e : rows_[i]) rev[e.dst].push_back(i);

    auto sweep = [n](auto&& neighbors) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    };
    bool fwd = sweep([this](std::size_t v) {
        std::vector<std::size_t> out;
        out.reserve(rows_[v].size());
        for (const Edge& e : rows_[v]) out.push_back(e.dst);
        return out;
    });
    bool bwd = sweep([&rev](std::size_t v) { return rev[v]; });
    return fwd && bwd;
}

std::vector<Rat> Chain::stationary_exact() const {
    if (!irreducible())
        throw std::domain_error("stationary_exact: chain is not irreducible");
    std::size_t n = size();
    std::vector<RatRow> rows;
    rows.reserve(n + 1);
    // balance: sum_i pi_i P(i -> j) = pi_j, written over off-diagonal edges as
    // sum_{i != j} pi_i P(i->j) - pi_j (1 - hold_j) = 0
    std::vector<RatRow> bal(n, RatRow(n + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (const Edge& e : rows_[i]) {
            bal[e.dst][i] += e.prob;
            bal[i][i] -= e.prob;
        }
    for (std::size_t j = 0; j < n; ++j) rows.push_back(std::move(bal[j]));
    RatRow norm(n + 1, Rat(1));
    rows.push_back(std::move(norm));  // sum pi = 1 (rhs column is 1 as well)

    auto sol = solve_exact(rows, n);
    if (!sol) throw std::logic_error("stationary_exact: singular system for an irreducible chain");
    return *sol;
}

bool Chain::is_stationary(const std::vector<Rat>& pi) const {
    if (pi.size() != size()) throw std::invalid_argument("is_stationary: size mismatch");
    std::vector<Rat> in(size(), Rat(0));
    std::vector<Rat> outmass(size(), Rat(0));
    for (std::size_t i = 0; i < size(); ++i)
        for (const Edge& e : rows_[i]) {
            in[e.dst] += pi[i] * e.prob;
            outmass[i] += pi[i] * e.prob;
        }
    for (std::size_t j = 0; j < size(); ++j)
        if (in[j] != outmass[j]) return false;  // pi_j = in_j + pi_j hold_j <=> in_j = pi_j (1 - hold_j)
    return true;
}

Chain::Trajectory Chain::simulate(Rng& rng, std::size_t start, std::uint64_t steps) const {
    if (start >= size()) throw std::invalid_argument("simulate: bad start state");
    std::vector<std::vector<std::uint64_t>> thresholds(size());
    for (std::size_t i = 0; i < size(); ++i) {
        std::vector<Rat> probs;
        probs.reserve(rows_[i].size());
        for (const Edge& e : rows_[i]) probs.push_back(e.prob);
        thresholds[i] = cumulative_thresholds(probs);
    }
    Trajectory traj;
    traj.reserve(steps + 1);
    std::uint32_t cur = static_cast<std::uint32_t>(start);
    traj.push_back(cur);
    for (std::uint64_t s = 0; s < steps; ++s) {
        std::size_t k = pick_threshold(rng, thresholds[cur]);
        if (k < rows_[cur].size()) cur = static_cast<std::uint32_t>(rows_[cur][k].dst);
        traj.push_back(cur);
    }
    return traj;
}

std::vector<double> Chain::empirical(const Trajectory& traj, std::uint64_t burn_in) const {
    if (traj.size() <= burn_in + 1) throw std::invalid_argument("empirical: trajectory shorter than burn-in");
    std::vector<double> freq(size(), 0.0);
    std::uint64_t count = 0;
    for (std::size_t k = burn_in + 1; k < traj.size(); ++k) {
        freq[traj[k]] += 1.0;
        ++count;
    }
    for (double& f : freq) f /= static_cast<double>(count);
    return freq;
}

std::string Chain::edge_list_csv() const {
    std::ostringstream os;
    os << "src,dst,probability_exact,probability_float\n";
    for (std::size_t i = 0; i < size(); ++i) {
        for (const Edge& e : rows_[i])
            os << '"' << label(i) << "\",\"" << label(e.dst) << "\"," << rat_str(e.prob) << ','
               << rat_double(e.prob) << '\n';
        Rat hold = hold_probability(i);
        if (hold != 0)
            os << '"' << label(i) << "\",\"" << label(i) << "\"," << rat_str(hold) << ','
               << rat_double(hold) << '\n';
    }
    return os.str();
}

double tv_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tv_distance: size mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s / 2;
}

std::vector<double> to_doubles(const std::vector<Rat>& pi) {
    std::vector<double> out(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out[i] = rat_double(pi[i]);
    return out;
}

// ---------------------------------------------------------------------------
// ChainBuilder
// ---------------------------------------------------------------------------

void ChainBuilder::add_state(const std::vector<int>& key) { acc_[key]; }

void ChainBuilder::add_transition(const std::vector<int>& src, const std::vector<int>& dst,
                                  const Rat& prob) {
    if (prob < 0 || prob > 1) throw std::invalid_argument("ChainBuilder: probability outside [0,1]");
    acc_[src];
    acc_[dst];
    if (prob == 0 || src == dst) return;  // self mass is the lazy remainder
    acc_[src][dst] += prob;
}

Chain ChainBuilder::finalize() const {
    Chain c;
    for (const auto& [key, row] : acc_) {
        c.index_.emplace(key, c.keys_.size());
        c.keys_.push_back(key);
    }
    c.rows_.resize(c.keys_.size());
    for (const auto& [key, row] : acc_) {
        std::size_t i = c.index_.at(key);
        Rat sum(0);
        for (const auto& [dst, p] : row) {
            if (p < 0 || p > 1) throw std::invalid_argument("ChainBuilder: probability outside [0,1]");
            sum += p;
            c.rows_[i].push_back({c.index_.at(dst), p});
        }
        if (sum > 1) throw std::invalid_argument("ChainBuilder: outgoing probabilities exceed 1");
    }
    return c;
}

// ---------------------------------------------------------------------------
// kernels
// ---------------------------------------------------------------------------

// swap eagerness between adjacent species: falls win, rises carry weight t, ties freeze
Rat swap_weight(int left, int right, const Rat& t) {
    if (left > right) return Rat(1);
    if (left < right) return t;
    return Rat(0);
}

namespace {

std::pair<int, int> ring_sites(int i, int n) { return i == 0 ? std::pair(n, 1) : std::pair(i, i + 1); }

void check_t(const Rat& t) {
    if (t < 0 || t >= 1) throw std::invalid_argument("t must lie in [0,1)");
}

std::vector<int> cat(const Tuple& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

Chain masep_chain(const Tuple& lambda, const Rat& t) {
    require_nondecreasing(lambda, "masep_chain");
    check_t(t);
    int n = static_cast<int>(lambda.size());
    Rat unit = frac(1, n);
    ChainBuilder b;
    for (const Tuple& mu : rearrangement_class(lambda)) {
        b.add_state(mu);
        for (int i = 0; i < n; ++i) {
            auto [a, bb] = ring_sites(i, n);
            Tuple nu = apply_sbar_ring(i, mu);
            b.add_transition(mu, nu, unit * swap_weight(mu[a - 1], mu[bb - 1], t));
        }
    }
    return b.finalize();
}

Chain aux_tasep_chain(const StoneSystem& stones) {
    int n = stones.n();
    Rat unit = frac(1, n);
    ChainBuilder b;
    for (const Perm& sigma : stones.omega()) {
        b.add_state(sigma.one_line());
        Tuple d = stones.site_densities(sigma);
        for (int i = 0; i < n; ++i) {
            auto [a, bb] = ring_sites(i, n);
            if (d[a - 1] < d[bb - 1]) {
                Perm moved = (i == 0 ? Perm::ring_swap(n) : Perm::adjacent(n, i)) * sigma;
                b.add_transition(sigma.one_line(), moved.one_line(), unit);
            }
        }
    }
    return b.finalize();
}

Rat stone_signal_probability(const Rat& chi_j, const Rat& chi_jp, const Rat& t) {
    Rat den = t * chi_j - chi_jp;
    if (den == 0) throw std::invalid_argument("stone signal probability: zero denominator");
    return (chi_j - chi_jp) / den;
}

namespace {

// validates chi for the stoned ring ASEP and returns p(j,j') for cross-density pairs
std::map<std::pair<int, int>, Rat> signal_table(const StoneSystem& stones,
                                                const std::vector<Rat>& chi, const Rat& t) {
    int n = stones.n();
    if (static_cast<int>(chi.size()) != n)
        throw std::invalid_argument("stoned chain: chi must have one entry per stone");
    for (const Rat& x : chi)
        if (x == 0) throw std::invalid_argument("stoned chain: chi entries must be nonzero");
    std::map<std::pair<int, int>, Rat> table;
    bool any_positive = false;
    for (int j = 1; j <= n; ++j)
        for (int jp = 1; jp <= n; ++jp) {
            if (stones.density_of(j) >= stones.density_of(jp)) continue;
            Rat p = stone_signal_probability(chi[j - 1], chi[jp - 1], t);
            if (p < 0 || p >= 1)
                throw std::invalid_argument("stoned chain: signal probability p(" + std::to_string(j) +
                                            "," + std::to_string(jp) + ") = " + rat_str(p) +
                                            " lies outside [0,1)");
            if (p > 0) any_positive = true;
            table[{j, jp}] = p;
        }
    if (!any_positive)
        throw std::invalid_argument("stoned chain: all signal probabilities vanish");
    return table;
}

}  // namespace

Chain stoned_masep_chain(const Tuple& lambda, const StoneSystem& stones,
                         const std::vector<Rat>& chi, const Rat& t) {
    require_nondecreasing(lambda, "stoned_masep_chain");
    check_t(t);
    int n = static_cast<int>(lambda.size());
    if (stones.n() != n) throw std::invalid_argument("stoned_masep_chain: stone count must match lambda");
    auto signals = signal_table(stones, chi, t);
    Rat unit = frac(1, n);
    ChainBuilder b;
    std::vector<Perm> omega = stones.omega();
    for (const Tuple& mu : rearrangement_class(lambda))
        for (const Perm& sigma : omega) {
            std::vector<int> key = cat(mu, sigma.one_line());
            b.add_state(key);
            Perm inv = sigma.inverse();
            Tuple d = stones.site_densities(sigma);
            for (int i = 0; i < n; ++i) {
                auto [a, bb] = ring_sites(i, n);
                if (d[a - 1] >= d[bb - 1]) continue;  // stones only advance across density rises
                Perm moved = (i == 0 ? Perm::ring_swap(n) : Perm::adjacent(n, i)) * sigma;
                Rat p = signals.at({inv(a), inv(bb)});
                Rat follow = p * swap_weight(mu[a - 1], mu[bb - 1], t);
                Tuple nu = apply_sbar_ring(i, mu);
                if (nu != mu) b.add_transition(key, cat(nu, moved.one_line()), unit * follow);
                b.add_transition(key, cat(mu, moved.one_line()), unit * (1 - follow));
            }
        }
    return b.finalize();
}

namespace {

Rat species_rate(const std::map<int, Rat>& rates, int k) {
    auto it = rates.find(k);
    if (it == rates.end())
        throw std::invalid_argument("itasep: missing rate for species " + std::to_string(k));
    return it->second;
}

void check_rates(const Tuple& lambda, const std::map<int, Rat>& rates) {
    for (const auto& [k, a] : rates)
        if (a <= 0 || a >= 1)
            throw std::invalid_argument("itasep: rate for species " + std::to_string(k) +
                                        " must lie in (0,1)");
    for (int k : lambda) species_rate(rates, k);
}

}  // namespace

Chain itasep_chain(const Tuple& lambda, const std::map<int, Rat>& rates) {
    require_nondecreasing(lambda, "itasep_chain");
    check_rates(lambda, rates);
    int n = static_cast<int>(lambda.size());
    Rat unit = frac(1, n);
    ChainBuilder b;
    for (const Tuple& mu : rearrangement_class(lambda)) {
        b.add_state(mu);
        for (int i = 0; i < n; ++i) {
            auto [a, bb] = ring_sites(i, n);
            if (mu[a - 1] > mu[bb - 1])
                b.add_transition(mu, apply_sbar_ring(i, mu), unit * species_rate(rates, mu[a - 1]));
        }
    }
    return b.finalize();
}

Chain stoned_itasep_chain(const Tuple& lambda, const StoneSystem& stones,
                          const std::map<int, Rat>& p, const std::map<int, Rat>& rates) {
    require_nondecreasing(lambda, "stoned_itasep_chain");
    check_rates(lambda, rates);
    int n = static_cast<int>(lambda.size());
    if (stones.n() != n) throw std::invalid_argument("stoned_itasep_chain: stone count must match lambda");
    if (stones.m() != 2)
        throw std::invalid_argument("stoned_itasep_chain: exactly two stone densities required");
    bool any_positive = false;
    for (int j = 1; j <= n; ++j) {
        if (stones.density_of(j) != 1) {
            if (p.count(j)) throw std::invalid_argument("stoned_itasep_chain: p given for a non-unit-density stone");
            continue;
        }
        auto it = p.find(j);
        if (it == p.end())
            throw std::invalid_argument("stoned_itasep_chain: missing p for stone " + std::to_string(j));
        if (it->second < 0 || it->second >= 1)
            throw std::invalid_argument("stoned_itasep_chain: p must lie in [0,1)");
        if (it->second > 0) any_positive = true;
    }
    if (!any_positive) throw std::invalid_argument("stoned_itasep_chain: all p vanish");

    Rat unit = frac(1, n);
    ChainBuilder b;
    for (const Tuple& mu : rearrangement_class(lambda))
        for (const Perm& sigma : stones.omega()) {
            std::vector<int> key = cat(mu, sigma.one_line());
            b.add_state(key);
            Perm inv = sigma.inverse();
            Tuple d = stones.site_densities(sigma);
            for (int i = 0; i < n; ++i) {
                auto [a, bb] = ring_sites(i, n);
                if (d[a - 1] >= d[bb - 1]) continue;
                Perm moved = (i == 0 ? Perm::ring_swap(n) : Perm::adjacent(n, i)) * sigma;
                Rat follow(0);
                if (mu[a - 1] > mu[bb - 1]) follow = p.at(inv(a)) * species_rate(rates, mu[a - 1]);
                Tuple nu = apply_sbar_ring(i, mu);
                if (follow != 0) b.add_transition(key, cat(nu, moved.one_line()), unit * follow);
                b.add_transition(key, cat(mu, moved.one_line()), unit * (1 - follow));
            }
        }
    return b.finalize();
}

Chain obasep_chain(const Tuple& lambda, const Rat& alpha, const Rat& beta, const Rat& t) {
    require_nondecreasing(lambda, "obasep_chain");
    check_t(t);
    if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1)
        throw std::invalid_argument("obasep_chain: alpha and beta must lie in (0,1)");
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("obasep_chain: lambda must be nonnegative");
    int n = static_cast<int>(lambda.size());
    Rat unit = frac(1, n + 1);
    ChainBuilder b;
    for (const Tuple& mu : signed_rearrangement_class(lambda)) {
        b.add_state(mu);
        for (int i = 0; i <= n; ++i) {
            Tuple nu = apply_sbar_typec(i, mu);
            if (nu == mu) continue;
            Rat w;
            if (i == 0)
                w = alpha;
            else if (i == n)
                w = beta;
            else
                w = swap_weight(mu[i - 1], mu[i], t);
            b.add_transition(mu, nu, unit * w);
        }
    }
    return b.finalize();
}

int aux_cyclic_shift(int n, int h) {
    if (h == 0 || h > n || h < -n) throw std::invalid_argument("aux_cyclic_shift: phase out of range");
    if (h == n) return -n;
    if (h == -1) return 1;
    return h + 1;
}

Chain stoned_obasep_chain(const Tuple& lambda, const std::vector<Rat>& chi,
                          const Rat& chi_stone, const Rat& alpha, const Rat& beta,
                          const Rat& t) {
    require_nondecreasing(lambda, "stoned_obasep_chain");
    check_t(t);
    if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1)
        throw std::invalid_argument("stoned_obasep_chain: alpha and beta must lie in (0,1)");
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("stoned_obasep_chain: lambda must be nonnegative");
    int n = static_cast<int>(lambda.size());
    if (static_cast<int>(chi.size()) != n - 1)
        throw std::invalid_argument("stoned_obasep_chain: need n-1 site weights");

    Rat sq = chi_stone * chi_stone;
    auto boundary = [&](const Rat& edge) -> Rat {
        Rat den = (1 - t) * chi_stone + edge * (1 - sq);
        if (den == 0) throw std::invalid_argument("stoned_obasep_chain: degenerate boundary weight");
        return Rat((1 - sq) / den);
    };
    Rat p0 = boundary(alpha), pn = boundary(beta);
    std::vector<Rat> up(n - 1), down(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        up[i - 1] = stone_signal_probability(chi_stone, chi[i - 1], t);
        down[i - 1] = stone_signal_probability(chi_stone, 1 / chi[i - 1], t);
    }
    auto check_open = [](const Rat& p, const char* what) {
        if (p <= 0 || p >= 1)
            throw std::invalid_argument(std::string("stoned_obasep_chain: ") + what +
                                        " = " + rat_str(p) + " lies outside (0,1)");
    };
    check_open(p0, "p_0");
    check_open(pn, "p_n");
    for (int i = 1; i <= n - 1; ++i) {
        check_open(up[i - 1], "p_up");
        check_open(down[i - 1], "p_down");
    }

    ChainBuilder b;
    for (const Tuple& mu : signed_rearrangement_class(lambda))
        for (int h = -n; h <= n; ++h) {
            if (h == 0) continue;
            std::vector<int> key = mu;
            key.push_back(h);
            b.add_state(key);
            int h2 = aux_cyclic_shift(n, h);
            Rat follow(0);
            Tuple nu = mu;
            if (h == -1) {
                nu = apply_sbar_typec(0, mu);
                if (nu != mu) follow = p0 * alpha;
            } else if (h == n) {
                nu = apply_sbar_typec(n, mu);
                if (nu != mu) follow = pn * beta;
            } else if (h >= 1) {
                nu = apply_sbar_typec(h, mu);
                follow = up[h - 1] * swap_weight(mu[h - 1], mu[h], t);
            } else {
                int i = -h - 1;  // phase -(i+1) drives the swap at sites (i, i+1)
                nu = apply_sbar_typec(i, mu);
                follow = down[i - 1] * swap_weight(mu[i - 1], mu[i], t);
            }
            std::vector<int> stay = mu, go = nu;
            stay.push_back(h2);
            go.push_back(h2);
            if (nu != mu && follow != 0) b.add_transition(key, go, follow);
            b.add_transition(key, stay, 1 - follow);
        }
    return b.finalize();
}

std::vector<std::pair<Tuple, Rat>> project_stationary(const Chain& fine,
                                                      const std::vector<Rat>& pi,
                                                      const Tuple& lambda_coarse) {
    if (pi.size() != fine.size()) throw std::invalid_argument("project_stationary: size mismatch");
    require_nondecreasing(lambda_coarse, "project_stationary");
    int n = static_cast<int>(lambda_coarse.size());
    std::map<Tuple, Rat> acc;
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const std::vector<int>& key = fine.key(i);
        if (static_cast<int>(key.size()) < n)
            throw std::invalid_argument("project_stationary: fine states shorter than the coarse tuple");
        Tuple out(key.size());
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s < static_cast<std::size_t>(n)) {
                if (key[s] < 1 || key[s] > n)
                    throw std::invalid_argument("project_stationary: species outside 1..n");
                out[s] = lambda_coarse[key[s] - 1];
            } else {
                out[s] = key[s];
            }
        }
        acc[out] += pi[i];
    }
    return std::vector<std::pair<Tuple, Rat>>(acc.begin(), acc.end());
}

}  // namespace alcove
