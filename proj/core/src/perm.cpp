#include "alcove/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace alcove {

// ---------------------------------------------------------------------------
// Perm
// ---------------------------------------------------------------------------

Perm::Perm(int n) {
    if (n <= 0) throw std::invalid_argument("Perm: n must be positive");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

Perm Perm::from_one_line(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    if (n == 0) throw std::invalid_argument("Perm: empty one-line notation");
    std::vector<char> seen(n + 1, 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Perm: not a bijection of [1..n]");
        seen[v] = 1;
    }
    Perm p;
    p.img_ = images;
    return p;
}

Perm Perm::adjacent(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("Perm::adjacent: index out of range");
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::ring_swap(int n) {
    if (n < 2) throw std::invalid_argument("Perm::ring_swap: n must be at least 2");
    Perm p(n);
    std::swap(p.img_[0], p.img_[n - 1]);
    return p;
}

Perm Perm::rotation(int n) {
    Perm p(n);
    for (int i = 1; i <= n; ++i) p.img_[i - 1] = (i % n) + 1;
    return p;
}

Perm Perm::longest(int n) {
    Perm p(n);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    if (n() != o.n()) throw std::invalid_argument("Perm: size mismatch");
    Perm out(n());
    for (int i = 1; i <= n(); ++i) out.img_[i - 1] = img_[o.img_[i - 1] - 1];
    return out;
}

Perm Perm::inverse() const {
    Perm out(n());
    for (int i = 1; i <= n(); ++i) out.img_[img_[i - 1] - 1] = i;
    return out;
}

long Perm::inversions() const {
    long c = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++c;
    return c;
}

std::string Perm::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ',';
        os << img_[i];
    }
    return os.str();
}

std::vector<Perm> Perm::all(int n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

// ---------------------------------------------------------------------------
// SignedPerm
// ---------------------------------------------------------------------------

SignedPerm::SignedPerm(int n) {
    if (n <= 0) throw std::invalid_argument("SignedPerm: n must be positive");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

SignedPerm SignedPerm::from_one_line(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    if (n == 0) throw std::invalid_argument("SignedPerm: empty one-line notation");
    std::vector<char> seen(n + 1, 0);
    for (int v : images) {
        int a = v < 0 ? -v : v;
        if (a < 1 || a > n || seen[a]) throw std::invalid_argument("SignedPerm: |images| not a bijection of [1..n]");
        seen[a] = 1;
    }
    SignedPerm p;
    p.img_ = images;
    return p;
}

SignedPerm SignedPerm::adjacent(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("SignedPerm::adjacent: index out of range");
    SignedPerm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

SignedPerm SignedPerm::negate_last(int n) {
    SignedPerm p(n);
    p.img_[n - 1] = -n;
    return p;
}

int SignedPerm::operator()(int i) const {
    if (i == 0 || i > n() || i < -n()) throw std::invalid_argument("SignedPerm: index out of range");
    return i > 0 ? img_[i - 1] : -img_[-i - 1];
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    if (n() != o.n()) throw std::invalid_argument("SignedPerm: size mismatch");
    SignedPerm out(n());
    for (int i = 1; i <= n(); ++i) out.img_[i - 1] = (*this)(o.img_[i - 1]);
    return out;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm out(n());
    for (int i = 1; i <= n(); ++i) {
        int v = img_[i - 1];
        if (v > 0)
            out.img_[v - 1] = i;
        else
            out.img_[-v - 1] = -i;
    }
    return out;
}

long SignedPerm::length() const {
    // count positive roots sent to negative ones; roots are e_i - e_j (i<j),
    // e_i + e_j (i<j), and 2e_i, with w e_i = sgn(w(i)) e_{|w(i)|}
    long c = 0;
    int nn = n();
    auto img = [&](int i) { return img_[i - 1]; };
    for (int i = 1; i <= nn; ++i) {
        if (img(i) < 0) ++c;  // 2e_i
        for (int j = i + 1; j <= nn; ++j) {
            // e_i - e_j maps to sgn(w(i)) e_{|w(i)|} - sgn(w(j)) e_{|w(j)|}
            int a = img(i), b = img(j);
            int pa = a < 0 ? -a : a, pb = b < 0 ? -b : b;
            int ca = a < 0 ? -1 : 1, cb = b < 0 ? -1 : 1;
            // leading coefficient = coefficient on the smaller index
            int lead_minus = (pa < pb) ? ca : -cb;
            if (pa == pb) throw std::logic_error("SignedPerm: duplicate magnitude");
            if (lead_minus < 0) ++c;
            int lead_plus = (pa < pb) ? ca : cb;
            if (lead_plus < 0) ++c;
        }
    }
    return c;
}

Tuple SignedPerm::act(const Tuple& y) const {
    if (static_cast<int>(y.size()) != n()) throw std::invalid_argument("SignedPerm::act: size mismatch");
    Tuple out(y.size());
    for (int j = 1; j <= n(); ++j) {
        int v = img_[j - 1];
        if (v > 0)
            out[v - 1] = y[j - 1];
        else
            out[-v - 1] = -y[j - 1];
    }
    return out;
}

std::string SignedPerm::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ',';
        os << img_[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// AffinePerm
// ---------------------------------------------------------------------------

AffinePerm::AffinePerm(int n) {
    if (n <= 0) throw std::invalid_argument("AffinePerm: n must be positive");
    win_.resize(n);
    std::iota(win_.begin(), win_.end(), 1);
}

AffinePerm AffinePerm::from_window(const std::vector<long long>& window) {
    int n = static_cast<int>(window.size());
    if (n == 0) throw std::invalid_argument("AffinePerm: empty window");
    long long sum = 0;
    std::set<long long> residues;
    for (long long v : window) {
        sum += v;
        residues.insert(((v % n) + n) % n);
    }
    if (static_cast<int>(residues.size()) != n)
        throw std::invalid_argument("AffinePerm: window values collide mod n");
    if (sum != static_cast<long long>(n) * (n + 1) / 2)
        throw std::invalid_argument("AffinePerm: window sum must be n(n+1)/2");
    AffinePerm p;
    p.win_ = window;
    return p;
}

AffinePerm AffinePerm::s(int n, int i) {
    if (i < 0 || i > n - 1) throw std::invalid_argument("AffinePerm::s: index out of range");
    AffinePerm p(n);
    if (i >= 1) {
        std::swap(p.win_[i - 1], p.win_[i]);
    } else {
        // s_0 swaps the values 0 and 1 (and all their n-translates)
        p.win_[0] = 0;
        p.win_[n - 1] = n + 1;
    }
    return p;
}

AffinePerm AffinePerm::translation(const std::vector<long long>& eta) {
    int n = static_cast<int>(eta.size());
    long long sum = 0;
    for (long long e : eta) sum += e;
    if (sum != 0) throw std::invalid_argument("AffinePerm::translation: coordinates must sum to 0");
    std::vector<long long> win(n);
    for (int j = 1; j <= n; ++j) win[j - 1] = j + static_cast<long long>(n) * eta[j - 1];
    return from_window(win);
}

long long AffinePerm::operator()(long long i) const {
    long long nn = n();
    long long q = (i - 1) >= 0 ? (i - 1) / nn : -(((-(i - 1)) + nn - 1) / nn);
    long long r = i - nn * q;  // r in [1..n]
    return win_[r - 1] + nn * q;
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
    if (n() != o.n()) throw std::invalid_argument("AffinePerm: size mismatch");
    AffinePerm out;
    out.win_.resize(n());
    for (int j = 1; j <= n(); ++j) out.win_[j - 1] = (*this)(o.win_[j - 1]);
    return out;
}

AffinePerm AffinePerm::inverse() const {
    AffinePerm out;
    out.win_.resize(n());
    long long nn = n();
    for (int j = 1; j <= n(); ++j) {
        long long v = win_[j - 1];
        long long q = (v - 1) >= 0 ? (v - 1) / nn : -(((-(v - 1)) + nn - 1) / nn);
        long long r = v - nn * q;  // w(j) = r + n q with r in [1..n], so w^{-1}(r) = j - n q
        out.win_[r - 1] = j - nn * q;
    }
    return out;
}

AffinePerm AffinePerm::left_mul_s(int i) const {
    // (s_i w)(j) = s_i(w(j)): bump values congruent to i up by 1, to i+1 down by 1
    long long nn = n();
    int a = ((i % nn) + nn) % nn;          // class of i
    int b = (a + 1) % nn;                  // class of i+1
    AffinePerm out;
    out.win_ = win_;
    for (long long& v : out.win_) {
        long long r = ((v % nn) + nn) % nn;
        if (r == a)
            v += 1;
        else if (r == b)
            v -= 1;
    }
    return out;
}

long long AffinePerm::length() const {
    long long nn = n(), c = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j) {
            long long d = win_[i] - win_[j];
            c += d > 0 ? d / nn + 1 : (-d) / nn;
        }
    return c;
}

bool AffinePerm::left_ascent(int i) const {
    if (i < 0 || i > n() - 1) throw std::invalid_argument("AffinePerm::left_ascent: index out of range");
    AffinePerm inv = inverse();
    long long lo = (i == 0) ? inv(0) : inv(i);
    long long hi = (i == 0) ? inv(1) : inv(i + 1);
    return lo < hi;
}

bool AffinePerm::right_descent(int i) const {
    if (i < 0 || i > n() - 1) throw std::invalid_argument("AffinePerm::right_descent: index out of range");
    long long lo = (i == 0) ? (*this)(0) : win_[i - 1];
    long long hi = (i == 0) ? win_[0] : win_[i];
    return lo > hi;
}

Perm AffinePerm::finite_part() const {
    std::vector<int> img(n());
    long long nn = n();
    for (int j = 0; j < n(); ++j) img[j] = static_cast<int>(((win_[j] - 1) % nn + nn) % nn + 1);
    return Perm::from_one_line(img);
}

std::vector<long long> AffinePerm::translation_part() const {
    Perm bar = finite_part();
    std::vector<long long> eta(n());
    for (int j = 1; j <= n(); ++j) eta[j - 1] = (win_[j - 1] - bar(j)) / n();
    return eta;
}

bool AffinePerm::is_grassmannian() const {
    for (std::size_t j = 0; j + 1 < win_.size(); ++j)
        if (win_[j] > win_[j + 1]) return false;
    return true;
}

std::vector<Rat> AffinePerm::act(const std::vector<Rat>& gamma) const {
    if (static_cast<int>(gamma.size()) != n()) throw std::invalid_argument("AffinePerm::act: size mismatch");
    long long nn = n();
    std::vector<Rat> out(gamma.size());
    for (int j = 0; j < n(); ++j) {
        long long v = win_[j];
        long long q = (v - 1) >= 0 ? (v - 1) / nn : -(((-(v - 1)) + nn - 1) / nn);
        long long r = v - nn * q;
        out[j] = gamma[r - 1] - Rat(static_cast<long>(q));
    }
    return out;
}

std::string AffinePerm::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < win_.size(); ++i) {
        if (i) os << ',';
        os << win_[i];
    }
    os << ']';
    return os.str();
}

AffinePerm demazure_product(int n, const std::vector<int>& word) {
    AffinePerm y(n);
    long long len = 0;
    for (int k : word) {
        AffinePerm cand = y.left_mul_s(k);
        long long cl = cand.length();
        if (cl > len) {
            y = cand;
            len = cl;
        }
    }
    return y;
}

// ---------------------------------------------------------------------------
// compositions
// ---------------------------------------------------------------------------

void require_nondecreasing(const Tuple& lambda, const char* what) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] > lambda[i])
            throw std::invalid_argument(std::string(what) + ": parts must be nondecreasing");
}

std::vector<Tuple> rearrangement_class(const Tuple& lambda) {
    Tuple sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Tuple> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tuple> signed_rearrangement_class(const Tuple& lambda) {
    std::set<Tuple> acc;
    for (const Tuple& mu : rearrangement_class(lambda)) {
        std::vector<int> nonzero;
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (mu[i] != 0) nonzero.push_back(static_cast<int>(i));
        int k = static_cast<int>(nonzero.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            Tuple s = mu;
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b)) s[nonzero[b]] = -s[nonzero[b]];
            acc.insert(s);
        }
    }
    return std::vector<Tuple>(acc.begin(), acc.end());
}

Tuple apply_sbar_ring(int i, const Tuple& mu) {
    int n = static_cast<int>(mu.size());
    if (i < 0 || i > n - 1) throw std::invalid_argument("apply_sbar_ring: index out of range");
    Tuple out = mu;
    if (i == 0)
        std::swap(out[n - 1], out[0]);
    else
        std::swap(out[i - 1], out[i]);
    return out;
}

Tuple apply_sbar_typec(int i, const Tuple& mu) {
    int n = static_cast<int>(mu.size());
    if (i < 0 || i > n) throw std::invalid_argument("apply_sbar_typec: index out of range");
    Tuple out = mu;
    if (i == 0)
        out[0] = -out[0];
    else if (i == n)
        out[n - 1] = -out[n - 1];
    else
        std::swap(out[i - 1], out[i]);
    return out;
}

Tuple cycle_tuple(const Tuple& mu) {
    Tuple out(mu.size());
    out[0] = mu.back();
    std::copy(mu.begin(), mu.end() - 1, out.begin() + 1);
    return out;
}

// ---------------------------------------------------------------------------
// StoneSystem
// ---------------------------------------------------------------------------

StoneSystem::StoneSystem(Tuple density) : density_(std::move(density)) {
    if (density_.empty()) throw std::invalid_argument("StoneSystem: empty density map");
    if (density_.front() != 1) throw std::invalid_argument("StoneSystem: lowest density must be 1");
    for (std::size_t i = 1; i < density_.size(); ++i) {
        int step = density_[i] - density_[i - 1];
        if (step < 0) throw std::invalid_argument("StoneSystem: densities must be nondecreasing");
        if (step > 1) throw std::invalid_argument("StoneSystem: densities must be surjective onto [1..m]");
    }
    m_ = density_.back();
}

bool StoneSystem::admissible(const Perm& sigma) const {
    if (sigma.n() != n()) throw std::invalid_argument("StoneSystem: size mismatch");
    Perm inv = sigma.inverse();
    for (int k = 1; k <= m_; ++k) {
        std::vector<int> along_sites;   // stones of density k read along sites 1..n
        std::vector<int> natural;       // the same stones in index order
        for (int site = 1; site <= n(); ++site) {
            int stone = inv(site);
            if (density_[stone - 1] == k) along_sites.push_back(stone);
        }
        for (int stone = 1; stone <= n(); ++stone)
            if (density_[stone - 1] == k) natural.push_back(stone);
        // along_sites must be a cyclic rotation of natural
        std::size_t c = natural.size();
        auto start = std::find(along_sites.begin(), along_sites.end(), natural[0]);
        std::size_t off = static_cast<std::size_t>(start - along_sites.begin());
        for (std::size_t r = 0; r < c; ++r)
            if (along_sites[(off + r) % c] != natural[r]) return false;
    }
    return true;
}

std::vector<Perm> StoneSystem::omega() const {
    std::vector<Perm> out;
    for (const Perm& sigma : Perm::all(n()))
        if (admissible(sigma)) out.push_back(sigma);
    return out;
}

int StoneSystem::crossing_count(const Perm& sigma) const {
    Tuple d = site_densities(sigma);
    int c = 0;
    for (int i = 0; i < n(); ++i)
        if (d[i] < d[(i + 1) % n()]) ++c;
    return c;
}

Tuple StoneSystem::site_densities(const Perm& sigma) const {
    if (sigma.n() != n()) throw std::invalid_argument("StoneSystem: size mismatch");
    // stone j sits on site sigma(j), so the density tuple along sites is sigma . density
    return sigma.act(density_);
}

}  // namespace alcove
