#include "alcove/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "alcove/rng.hpp"

namespace alcove {

namespace {

long long rat_floor(const Rat& q) {
    Int num = q.get_num(), den = q.get_den(), z;
    mpz_fdiv_q(z.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return z.get_si();
}

long long rat_ceil(const Rat& q) {
    Int num = q.get_num(), den = q.get_den(), z;
    mpz_cdiv_q(z.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return z.get_si();
}

std::vector<Rat> alcove_barycenter(int n) {
    std::vector<Rat> b(n);
    for (int j = 1; j <= n; ++j) b[j - 1] = frac(n + 1 - 2 * j, 2 * n);
    return b;
}

Int pow2(unsigned long e) {
    Int z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
    return z;
}

std::string hyperplane_str(const std::array<long long, 3>& h) {
    return "x_" + std::to_string(h[0]) + " - x_" + std::to_string(h[1]) + " = " +
           std::to_string(h[2]);
}

}  // namespace

std::vector<Rat> alcove_interior_point(int n) {
    if (n < 2) throw std::invalid_argument("alcove_interior_point: need n >= 2");
    std::vector<Rat> z = alcove_barycenter(n);
    const Int scale = Int(n) * Int(n) * pow2(static_cast<unsigned long>(n) + 6);
    for (int j = 1; j <= n; ++j) {
        Rat eps(Int(n) * pow2(static_cast<unsigned long>(j) - 1) - (pow2(n) - 1), scale);
        eps.canonicalize();
        z[j - 1] += eps;
    }
    return z;
}

RayConfig RayConfig::standard(const std::vector<long long>& eta) {
    return {alcove_interior_point(static_cast<int>(eta.size())), eta};
}

std::vector<long long> delta_direction(int n) {
    if (n < 2) throw std::invalid_argument("delta_direction: need n >= 2");
    std::vector<long long> eta(n, 1);
    eta[n - 1] = 1 - n;
    return eta;
}

std::array<long long, 3> faced_hyperplane(const AffinePerm& u, int letter) {
    const int n = u.n();
    if (letter < 0 || letter >= n)
        throw std::invalid_argument("faced_hyperplane: letter out of range");
    const AffinePerm uinv = u.inverse();
    auto split = [&](long long site, long long& r, long long& q) {
        const long long v = uinv(site);
        r = v % n;
        if (r <= 0) r += n;
        q = (v - r) / n;
    };
    const long long a = (letter == 0) ? 1 : letter;
    const long long b = (letter == 0) ? n : letter + 1;
    const long long c = (letter == 0) ? 1 : 0;
    long long ra, qa, rb, qb;
    split(a, ra, qa);
    split(b, rb, qb);
    const long long k = c + qa - qb;
    if (ra < rb) return {ra, rb, k};
    return {rb, ra, -k};
}

BilliardWord ray_word(const RayConfig& cfg, int horizon) {
    const int n = static_cast<int>(cfg.eta.size());
    if (n < 2 || cfg.z0.size() != cfg.eta.size())
        throw std::invalid_argument("ray_word: need matching z0 and eta of length >= 2");
    if (horizon < 2)
        throw std::invalid_argument("ray_word: horizon must be at least 2 to certify the period");
    long long esum = 0;
    bool ezero = true;
    for (long long e : cfg.eta) {
        esum += e;
        if (e != 0) ezero = false;
    }
    if (esum != 0 || ezero)
        throw std::invalid_argument("ray_word: eta must be a nonzero sum-zero integer vector");
    Rat zsum(0);
    for (const Rat& z : cfg.z0) zsum += z;
    if (zsum != 0) throw std::invalid_argument("ray_word: z0 must have sum zero");
    for (int j = 0; j + 1 < n; ++j)
        if (!(cfg.z0[j] > cfg.z0[j + 1]))
            throw std::invalid_argument("ray_word: z0 must lie strictly inside the fundamental alcove");
    if (!(cfg.z0.front() - cfg.z0.back() < 1))
        throw std::invalid_argument("ray_word: z0 must lie strictly inside the fundamental alcove");

    struct Crossing {
        Rat time;
        std::array<long long, 3> h;
    };
    std::vector<Crossing> xs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long long d = cfg.eta[i - 1] - cfg.eta[j - 1];
            if (d == 0) continue;
            const Rat z = cfg.z0[i - 1] - cfg.z0[j - 1];
            const Rat far = z + Rat(static_cast<long>(horizon)) * Rat(static_cast<long>(d));
            long long klo, khi;
            if (d > 0) {
                klo = rat_floor(z) + 1;
                khi = rat_floor(far);
            } else {
                klo = rat_ceil(far);
                khi = rat_ceil(z) - 1;
            }
            for (long long k = klo; k <= khi; ++k) {
                Rat time = (Rat(static_cast<long>(k)) - z) / Rat(static_cast<long>(d));
                xs.push_back({time, {i, j, k}});
            }
        }
    std::sort(xs.begin(), xs.end(),
              [](const Crossing& a, const Crossing& b) { return a.time < b.time; });
    for (std::size_t m = 0; m + 1 < xs.size(); ++m)
        if (xs[m].time == xs[m + 1].time)
            throw std::invalid_argument(
                "ray_word: crossings of " + hyperplane_str(xs[m].h) + " and " +
                hyperplane_str(xs[m + 1].h) + " coincide at t = " + rat_str(xs[m].time) +
                "; the starting point is not generic for this direction");
    if (xs.empty()) throw std::invalid_argument("ray_word: the ray crosses no hyperplane");

    AffinePerm u(n);
    std::vector<int> letters;
    std::vector<Rat> times;
    letters.reserve(xs.size());
    times.reserve(xs.size());
    for (const Crossing& c : xs) {
        std::vector<Rat> y(n);
        for (int j = 0; j < n; ++j)
            y[j] = cfg.z0[j] + c.time * Rat(static_cast<long>(cfg.eta[j]));
        const std::vector<Rat> x = u.inverse().act(y);
        int letter = -1;
        for (int l = 1; l < n; ++l)
            if (x[l - 1] == x[l]) {
                if (letter != -1)
                    throw std::logic_error("ray_word: crossing point lies on two alcove walls");
                letter = l;
            }
        if (x[0] - x[n - 1] == 1) {
            if (letter != -1)
                throw std::logic_error("ray_word: crossing point lies on two alcove walls");
            letter = 0;
        }
        if (letter == -1)
            throw std::logic_error("ray_word: crossing point missed every wall of the fundamental alcove");
        if (faced_hyperplane(u, letter) != c.h)
            throw std::logic_error("ray_word: wall identification disagrees with the enumerated hyperplane " +
                                   hyperplane_str(c.h));
        letters.push_back(letter);
        times.push_back(c.time);
        u = u.left_mul_s(letter);
    }

    std::size_t c1 = 0;
    while (c1 < times.size() && times[c1] <= 1) ++c1;
    std::size_t c2 = 0;
    while (c1 + c2 < times.size() && times[c1 + c2] <= 2) ++c2;
    if (c1 == 0 || c2 != c1)
        throw std::logic_error("ray_word: crossing counts per unit time disagree");
    for (std::size_t m = 0; m < c1; ++m) {
        if (letters[c1 + m] != letters[m])
            throw std::logic_error("ray_word: letters fail to repeat over the second unit of time");
        if (times[c1 + m] != times[m] + 1)
            throw std::logic_error("ray_word: crossing times fail to repeat over the second unit of time");
    }
    int period = static_cast<int>(c1);
    for (std::size_t d = 1; d <= c1; ++d) {
        if (c1 % d != 0) continue;
        bool ok = true;
        for (std::size_t m = 0; m < c1 && ok; ++m) ok = letters[m] == letters[(m + d) % c1];
        if (ok) {
            period = static_cast<int>(d);
            break;
        }
    }
    for (std::size_t m = 0; m < letters.size(); ++m)
        if (letters[m] != letters[m % static_cast<std::size_t>(period)])
            throw std::logic_error("ray_word: letter sequence is not periodic with the detected period");
    return {n, std::move(letters), std::move(times), period};
}

namespace {

std::vector<TrajectoryState> simulate_impl(const RayConfig& cfg, const Rat& p,
                                           std::uint64_t steps, std::uint64_t seed,
                                           bool chamber_walls_reflect) {
    if (p <= 0 || p >= 1)
        throw std::invalid_argument("simulate: pass probability must lie in (0,1)");
    const BilliardWord word = ray_word(cfg, 2);
    const int n = word.n;
    const std::uint64_t period = static_cast<std::uint64_t>(word.period);
    AffinePerm u(n);
    std::set<std::array<long long, 3>> crossed;
    std::vector<TrajectoryState> out;
    out.reserve(steps + 1);
    Rng rng = rng_root(seed);
    for (std::uint64_t m = 0; m < steps; ++m) {
        const int l = word.letter(m);
        const std::array<long long, 3> h = faced_hyperplane(u, l);
        const bool uncrossed = crossed.find(h) == crossed.end();
        if (uncrossed != u.left_ascent(l))
            throw std::logic_error(
                "simulate: crossed-set bookkeeping diverged from the length criterion at step " +
                std::to_string(m));
        bool pass = uncrossed;
        if (chamber_walls_reflect) {
            const bool wall = (h[2] == 0);
            if (wall == u.left_mul_s(l).is_grassmannian())
                throw std::logic_error(
                    "simulate: chamber wall detection diverged from the dominant-chamber criterion at step " +
                    std::to_string(m));
            pass = pass && !wall;
        }
        pass = pass && rng.bernoulli(p);
        out.push_back({u, m, static_cast<int>(m % period), l, pass});
        if (pass) {
            crossed.insert(h);
            u = u.left_mul_s(l);
        }
    }
    out.push_back({u, steps, static_cast<int>(steps % period), word.letter(steps), false});
    return out;
}

}  // namespace

std::vector<TrajectoryState> simulate_rrbt(const RayConfig& cfg, const Rat& p,
                                           std::uint64_t steps, std::uint64_t seed) {
    return simulate_impl(cfg, p, steps, seed, false);
}

std::vector<TrajectoryState> simulate_agrrbt(const RayConfig& cfg, const Rat& p,
                                             std::uint64_t steps, std::uint64_t seed) {
    return simulate_impl(cfg, p, steps, seed, true);
}

std::vector<TrajectoryState> lam_walk(int n, std::uint64_t seed, std::uint64_t steps) {
    if (n < 2) throw std::invalid_argument("lam_walk: need n >= 2");
    Rng rng = rng_root(seed);
    AffinePerm u(n);
    std::vector<TrajectoryState> out;
    out.reserve(steps + 1);
    for (std::uint64_t m = 0; m < steps; ++m) {
        const int l = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const bool cross = u.left_ascent(l);
        out.push_back({u, m, 0, l, cross});
        if (cross) u = u.left_mul_s(l);
    }
    out.push_back({u, steps, 0, 0, false});
    return out;
}

std::vector<double> empirical_direction(const std::vector<TrajectoryState>& traj) {
    if (traj.empty()) throw std::invalid_argument("empirical_direction: empty trajectory");
    const AffinePerm& u = traj.back().u;
    const int n = u.n();
    const std::vector<Rat> b = alcove_barycenter(n);
    std::vector<Rat> d = u.act(b);
    bool zero = true;
    for (int j = 0; j < n; ++j) {
        d[j] -= b[j];
        if (d[j] != 0) zero = false;
    }
    if (zero)
        throw std::domain_error("empirical_direction: trajectory still sits in the initial alcove");
    double norm2 = 0;
    for (int j = 0; j < n; ++j) {
        const double v = rat_double(d[j]);
        norm2 += v * v;
    }
    const double norm = std::sqrt(norm2);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = rat_double(d[j]) / norm;
    return out;
}

std::map<std::vector<long long>, Rat> demazure_thinning_distribution(
    int n, const BilliardWord& word, int m, const Rat& p) {
    if (n < 2) throw std::invalid_argument("demazure_thinning_distribution: need n >= 2");
    if (m < 0 || m > 24)
        throw std::invalid_argument("demazure_thinning_distribution: prefix length must lie in [0, 24]");
    if (p < 0 || p > 1)
        throw std::invalid_argument("demazure_thinning_distribution: p must lie in [0,1]");
    std::vector<Rat> keep(m + 1), drop(m + 1);
    keep[0] = drop[0] = 1;
    for (int j = 1; j <= m; ++j) {
        keep[j] = keep[j - 1] * p;
        drop[j] = drop[j - 1] * (1 - p);
    }
    std::map<std::vector<long long>, Rat> out;
    std::vector<int> kept;
    kept.reserve(m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        kept.clear();
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1u) kept.push_back(word.letter(static_cast<std::uint64_t>(j)));
        const Rat weight = keep[kept.size()] * drop[m - kept.size()];
        if (weight == 0) continue;
        out[demazure_product(n, kept).window()] += weight;
    }
    return out;
}

std::vector<int> ToricChain::state_key(const Perm& w, int phase) {
    std::vector<int> key = w.one_line();
    key.push_back(phase);
    return key;
}

ToricChain toric_chain(const std::vector<long long>& eta, const Rat& p, const Rat& t) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("toric_chain: p must lie in (0,1)");
    if (t < 0 || t >= 1) throw std::invalid_argument("toric_chain: t must lie in [0,1)");
    BilliardWord word = ray_word(RayConfig::standard(eta), 2);
    const int n = word.n;
    const int N = word.period;

    // Whether the chamber-respecting lift at v crosses the wall faced in the
    // direction of letter l: the length rises and the lift stays Grassmannian.
    auto pass_bit = [](const AffinePerm& v, int l) {
        const AffinePerm sv = v.left_mul_s(l);
        return sv.length() > v.length() && sv.is_grassmannian();
    };

    // The pass side of each toric state is a property of the chamber-respecting
    // trajectories alone, so it is computed first by following only the moves
    // such a trajectory can make (reflect always, cross only when pass_bit
    // holds), and the crossing weights are attached to the quotient afterwards.
    std::map<std::vector<int>, AffinePerm> lifts;
    std::deque<std::pair<Perm, int>> frontier;
    lifts.emplace(ToricChain::state_key(Perm(n), 0), AffinePerm(n));
    frontier.emplace_back(Perm(n), 0);
    auto reach = [&](const Perm& w, int k, const AffinePerm& lift) {
        const std::vector<int> key = ToricChain::state_key(w, k);
        const auto it = lifts.find(key);
        if (it == lifts.end()) {
            lifts.emplace(key, lift);
            frontier.emplace_back(w, k);
            return;
        }
        const int l = word.letter(static_cast<std::uint64_t>(k));
        if (pass_bit(it->second, l) != pass_bit(lift, l))
            throw std::logic_error(
                "toric_chain: two lifts of the same toric state disagree on the pass side");
    };
    while (!frontier.empty()) {
        const std::pair<Perm, int> node = frontier.front();
        frontier.pop_front();
        const Perm& w = node.first;
        const int k = node.second;
        const AffinePerm v = lifts.at(ToricChain::state_key(w, k));
        const int l = word.letter(static_cast<std::uint64_t>(k));
        const int k1 = (k + 1) % N;
        reach(w, k1, v);
        if (pass_bit(v, l)) {
            const AffinePerm sv = v.left_mul_s(l);
            const Perm w1 = (l == 0 ? Perm::ring_swap(n) : Perm::adjacent(n, l)) * w;
            if (sv.finite_part() != w1)
                throw std::logic_error("toric_chain: lift projection mismatch");
            reach(w1, k1, sv);
        }
    }
    std::size_t expected = static_cast<std::size_t>(N);
    for (int i = 2; i <= n; ++i) expected *= static_cast<std::size_t>(i);
    if (lifts.size() != expected)
        throw std::domain_error("toric_chain: only " + std::to_string(lifts.size()) + " of " +
                                std::to_string(expected) +
                                " toric states are reachable; the chain is reducible");

    ChainBuilder builder;
    for (const auto& [key, v] : lifts) {
        const Perm w = v.finite_part();
        const int k = key.back();
        const int l = word.letter(static_cast<std::uint64_t>(k));
        const Rat q = pass_bit(v, l) ? p : Rat(p * t);
        const int k1 = (k + 1) % N;
        builder.add_transition(key, ToricChain::state_key(w, k1), 1 - q);
        if (q > 0) {
            const Perm w1 = (l == 0 ? Perm::ring_swap(n) : Perm::adjacent(n, l)) * w;
            builder.add_transition(key, ToricChain::state_key(w1, k1), q);
        }
    }
    Chain chain = builder.finalize();
    if (!chain.irreducible())
        throw std::domain_error(
            "toric_chain: the positive-probability graph is not strongly connected");
    return {std::move(chain), std::move(word)};
}

std::vector<Rat> psi_from_zeta(const ToricChain& tc, const std::vector<Rat>& zeta) {
    const int n = tc.word.n;
    const int N = tc.word.period;
    if (zeta.size() != tc.chain.size())
        throw std::invalid_argument("psi_from_zeta: distribution size does not match the chain");
    std::vector<Rat> psi(n, Rat(0));
    for (int k = 0; k < N; ++k) {
        if (tc.word.letter(static_cast<std::uint64_t>(k)) != 0) continue;
        for (const Perm& w : Perm::all(n)) {
            const Perm winv = w.inverse();
            const int a = winv(1);
            const int b = winv(n);
            if (a >= b) continue;
            const Rat& z = zeta[tc.index_of(w, k)];
            psi[a - 1] += z;
            psi[b - 1] -= z;
        }
    }
    return psi;
}

std::map<Tuple, Rat> chamber_probabilities(const std::vector<long long>& eta, const Rat& p) {
    const ToricChain plus = toric_chain(eta, p, Rat(0));
    std::vector<long long> neg = eta;
    for (long long& e : neg) e = -e;
    const ToricChain minus = toric_chain(neg, p, Rat(0));
    if (plus.word.period != minus.word.period)
        throw std::logic_error("chamber_probabilities: opposite rays produced different periods");
    const std::vector<Rat> zp = plus.chain.stationary_exact();
    const std::vector<Rat> zm = minus.chain.stationary_exact();
    const int n = plus.word.n;
    const Rat half_period = frac(plus.word.period, 2);
    const Perm wo = Perm::longest(n);
    std::map<Tuple, Rat> out;
    for (const Perm& w : Perm::all(n)) {
        const Perm x = w.inverse() * wo;
        out[w.one_line()] =
            half_period * (zp[plus.index_of(x, 0)] + zm[minus.index_of(x, 0)]);
    }
    return out;
}

Chain itasep_billiard_chain(int n, const Rat& p, const std::map<int, Rat>& rates) {
    if (n < 2) throw std::invalid_argument("itasep_billiard_chain: need n >= 2");
    if (p <= 0 || p >= 1)
        throw std::invalid_argument("itasep_billiard_chain: p must lie in (0,1)");
    for (int k = 1; k <= n; ++k) {
        const auto it = rates.find(k);
        if (it == rates.end() || it->second <= 0 || it->second > 1)
            throw std::invalid_argument("itasep_billiard_chain: species " + std::to_string(k) +
                                        " needs a rate in (0,1]");
    }
    ChainBuilder builder;
    for (const Perm& w : Perm::all(n)) {
        const Perm winv = w.inverse();
        for (int i = 0; i < n; ++i) {
            const std::vector<int> src = ToricChain::state_key(w, i);
            const int i1 = (i + 1) % n;
            const int x = winv(i == 0 ? n : i);
            const int y = winv(i == 0 ? 1 : i + 1);
            Rat q(0);
            if (x > y) q = p * rates.at(x);
            if (q > 0) {
                const Perm w1 = (i == 0 ? Perm::ring_swap(n) : Perm::adjacent(n, i)) * w;
                builder.add_transition(src, ToricChain::state_key(w1, i1), q);
            }
            builder.add_transition(src, ToricChain::state_key(w, i1), 1 - q);
        }
    }
    Chain chain = builder.finalize();
    if (!chain.irreducible())
        throw std::domain_error(
            "itasep_billiard_chain: the positive-probability graph is not strongly connected");
    return chain;
}

std::vector<int> typec_billiard_word(int n) {
    if (n < 2) throw std::invalid_argument("typec_billiard_word: need n >= 2");
    std::vector<int> letters(2 * static_cast<std::size_t>(n));
    for (int j = 0; j < 2 * n; ++j) letters[j] = j <= n ? j : 2 * n - j;
    return letters;
}

int iota_phase(int n, int h) {
    if (h == 0 || h < -n || h > n)
        throw std::invalid_argument("iota_phase: stone position must lie in +-[1..n]");
    return h > 0 ? h : h + 1 + 2 * n * (h == -1 ? 0 : 1);
}

int iota_inverse_phase(int n, int i) {
    if (i < 0 || i >= 2 * n)
        throw std::invalid_argument("iota_inverse_phase: phase must lie in [0, 2n)");
    if (i == 0) return -1;
    if (i <= n) return i;
    return i - 2 * n - 1;
}

Chain typec_billiard_chain(int n, const Rat& chi_stone, const Rat& alpha, const Rat& beta,
                           const Rat& t) {
    if (n < 2) throw std::invalid_argument("typec_billiard_chain: need n >= 2");
    Tuple lambda(n);
    std::iota(lambda.begin(), lambda.end(), 1);
    const Chain base =
        stoned_obasep_chain(lambda, std::vector<Rat>(n - 1, Rat(1)), chi_stone, alpha, beta, t);
    ChainBuilder builder;
    auto relabel = [&](std::vector<int> key) {
        key.back() = iota_phase(n, key.back());
        return key;
    };
    for (std::size_t s = 0; s < base.size(); ++s) {
        const std::vector<int> src = relabel(base.key(s));
        builder.add_state(src);
        for (const Chain::Edge& e : base.row(s))
            builder.add_transition(src, relabel(base.key(e.dst)), e.prob);
    }
    return builder.finalize();
}

std::string trajectory_csv(const std::vector<TrajectoryState>& traj) {
    std::string out = "M,window,letter,outcome\n";
    for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
        const TrajectoryState& s = traj[i];
        out += std::to_string(s.time);
        out += ',';
        const std::vector<long long>& win = s.u.window();
        for (std::size_t j = 0; j < win.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(win[j]);
        }
        out += ',';
        out += std::to_string(s.letter);
        out += ',';
        out += s.crossed ? "crossed" : "reflected";
        out += '\n';
    }
    return out;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string trajectory_svg(const std::vector<TrajectoryState>& traj) {
    if (traj.empty()) throw std::invalid_argument("trajectory_svg: empty trajectory");
    if (traj.front().u.n() != 3)
        throw std::invalid_argument("trajectory_svg: rendering is defined for n = 3 only");
    const std::vector<Rat> b = alcove_barycenter(3);
    const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    auto project = [&](const std::vector<Rat>& x) {
        const double x1 = rat_double(x[0]), x2 = rat_double(x[1]), x3 = rat_double(x[2]);
        return std::pair<double, double>{(x1 - x2) / s2, -(x1 + x2 - 2 * x3) / s6};
    };
    std::vector<std::pair<double, double>> pts;
    pts.reserve(traj.size());
    for (const TrajectoryState& s : traj) pts.push_back(project(s.u.act(b)));
    double minx = pts[0].first, maxx = minx, miny = pts[0].second, maxy = miny;
    for (const auto& [px, py] : pts) {
        minx = std::min(minx, px);
        maxx = std::max(maxx, px);
        miny = std::min(miny, py);
        maxy = std::max(maxy, py);
    }
    const double pad = 1.2;
    minx -= pad;
    miny -= pad;
    maxx += pad;
    maxy += pad;
    const double radius = std::sqrt(std::max({minx * minx + miny * miny, minx * minx + maxy * maxy,
                                              maxx * maxx + miny * miny,
                                              maxx * maxx + maxy * maxy}));
    const long kmax = static_cast<long>(std::ceil((radius + 1) * s2));
    const double reach = 2 * radius + 2;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt6(minx) + " " +
                      fmt6(miny) + " " + fmt6(maxx - minx) + " " + fmt6(maxy - miny) +
                      "\" width=\"640\">\n";
    struct Pencil {
        int i, j;
        double dir[3];
    };
    const Pencil pencils[3] = {{1, 2, {1, 1, -2}}, {1, 3, {1, -2, 1}}, {2, 3, {-2, 1, 1}}};
    for (const Pencil& pc : pencils)
        for (long k = -kmax; k <= kmax; ++k) {
            double x0[3] = {0, 0, 0};
            x0[pc.i - 1] = 0.5 * static_cast<double>(k);
            x0[pc.j - 1] = -0.5 * static_cast<double>(k);
            const double scale = reach / s6;
            auto proj3 = [&](const double* v) {
                return std::pair<double, double>{(v[0] - v[1]) / s2, -(v[0] + v[1] - 2 * v[2]) / s6};
            };
            const double e1[3] = {x0[0] + scale * pc.dir[0], x0[1] + scale * pc.dir[1],
                                  x0[2] + scale * pc.dir[2]};
            const double e2[3] = {x0[0] - scale * pc.dir[0], x0[1] - scale * pc.dir[1],
                                  x0[2] - scale * pc.dir[2]};
            const auto [ax, ay] = proj3(e1);
            const auto [bx, by] = proj3(e2);
            const bool wall = (k == 0);
            svg += "<line x1=\"" + fmt6(ax) + "\" y1=\"" + fmt6(ay) + "\" x2=\"" + fmt6(bx) +
                   "\" y2=\"" + fmt6(by) + "\" stroke=\"" + (wall ? "#404040" : "#c8c8c8") +
                   "\" stroke-width=\"" + (wall ? "0.030" : "0.015") + "\"/>\n";
        }
    svg += "<polyline fill=\"none\" stroke=\"#1a9850\" stroke-width=\"0.025\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt6(pts[i].first) + "," + fmt6(pts[i].second);
    }
    svg += "\"/>\n";
    svg += "<circle cx=\"" + fmt6(pts.front().first) + "\" cy=\"" + fmt6(pts.front().second) +
           "\" r=\"0.060\" fill=\"#d73027\"/>\n";
    svg += "<circle cx=\"" + fmt6(pts.back().first) + "\" cy=\"" + fmt6(pts.back().second) +
           "\" r=\"0.060\" fill=\"#4575b4\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace alcove
