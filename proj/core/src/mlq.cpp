#include "alcove/mlq.hpp"

#include <algorithm>
#include <stdexcept>

#include "alcove/hecke.hpp"

namespace alcove {

MultilineQueue::MultilineQueue(int cols, std::vector<std::vector<int>> row_columns)
    : cols_(cols), rows_(std::move(row_columns)) {
    if (cols_ < 1) throw std::invalid_argument("multiline queue: need at least one column");
    if (rows_.empty()) throw std::invalid_argument("multiline queue: need at least one row");
    for (const std::vector<int>& row : rows_) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 1 || row[k] > cols_)
                throw std::invalid_argument("multiline queue: column out of range");
            if (k > 0 && row[k] <= row[k - 1])
                throw std::invalid_argument("multiline queue: row columns must increase");
        }
    }
}

bool MultilineQueue::has_ball(int r, int c) const {
    const std::vector<int>& row = rows_.at(r);
    return std::binary_search(row.begin(), row.end(), c);
}

Poly MultilineQueue::weight() const {
    Expo g(cols_, 0);
    for (std::size_t r = 0; r + 1 < rows_.size(); ++r)
        for (int c : rows_[r]) ++g[c - 1];
    return Poly::monomial(g, Rat(1));
}

std::string MultilineQueue::str() const {
    std::string out;
    for (const std::vector<int>& row : rows_) {
        std::string line(cols_, '.');
        for (int c : row) line[c - 1] = 'o';
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

// Sorted k-subsets of {1,...,n} in lexicographic order.
std::vector<std::vector<int>> column_choices(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<int> row_ball_counts(const Tuple& lambda) {
    std::vector<int> counts(lambda.back() + 1, 0);
    for (int r = 0; r <= lambda.back(); ++r)
        for (int v : lambda)
            if (v <= r) ++counts[r];
    return counts;
}

}  // namespace

std::vector<MultilineQueue> enumerate_mlq(const Tuple& lambda, int n) {
    require_nondecreasing(lambda, "multiline queues");
    if (lambda.front() < 0) throw std::invalid_argument("multiline queues: negative part");
    if (n != static_cast<int>(lambda.size()))
        throw std::invalid_argument("multiline queues: column count must equal the tuple length");
    const std::vector<int> counts = row_ball_counts(lambda);
    std::vector<std::vector<std::vector<int>>> choices;
    for (int c : counts) choices.push_back(column_choices(n, c));
    std::vector<MultilineQueue> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<std::vector<int>> rows;
        for (std::size_t r = 0; r < choices.size(); ++r) rows.push_back(choices[r][idx[r]]);
        out.emplace_back(n, std::move(rows));
        std::size_t r = choices.size();
        while (r > 0 && ++idx[r - 1] == choices[r - 1].size()) idx[--r] = 0;
        if (r == 0) break;
    }
    return out;
}

BullyLabeling bully_paths(const MultilineQueue& q) {
    const int n = q.cols();
    const int nrows = q.row_count();
    for (int r = 1; r < nrows; ++r)
        if (q.row(r).size() < q.row(r - 1).size())
            throw std::invalid_argument("bully paths: row ball counts must be nondecreasing");

    // column -> position in the sorted row list, -1 for empty sites
    std::vector<std::vector<int>> at(nrows, std::vector<int>(n + 1, -1));
    for (int r = 0; r < nrows; ++r)
        for (std::size_t k = 0; k < q.row(r).size(); ++k) at[r][q.row(r)[k]] = static_cast<int>(k);

    BullyLabeling bl;
    bl.labels.resize(nrows);
    for (int r = 0; r < nrows; ++r) bl.labels[r].assign(q.row(r).size(), -1);

    const int paths = static_cast<int>(q.row(nrows - 1).size());
    for (int l = 1; l <= paths; ++l) {
        int start = 0;
        while (l > static_cast<int>(q.row(start).size())) ++start;
        int pos = 0;
        while (bl.labels[start][pos] != -1) ++pos;
        bl.labels[start][pos] = start;
        int col = q.row(start)[pos];
        for (int r = start + 1; r < nrows; ++r) {
            int found = -1;
            for (int k = 0; k < n; ++k) {
                int c = (col - 1 + k) % n + 1;
                int p = at[r][c];
                if (p >= 0 && bl.labels[r][p] == -1) {
                    found = c;
                    bl.labels[r][p] = start;
                    break;
                }
            }
            if (found < 0) throw std::logic_error("bully paths: no unclaimed ball below");
            col = found;
        }
    }
    bl.bottom_word = Tuple(bl.labels[nrows - 1].begin(), bl.labels[nrows - 1].end());
    return bl;
}

std::string render_labeled(const MultilineQueue& q, const BullyLabeling& bl) {
    std::string out;
    for (int r = 0; r < q.row_count(); ++r) {
        std::string line;
        std::vector<std::string> cells(q.cols(), ".");
        for (std::size_t k = 0; k < q.row(r).size(); ++k)
            cells[q.row(r)[k] - 1] = std::to_string(bl.labels[r][k]);
        for (int c = 0; c < q.cols(); ++c) {
            if (c > 0) line += ' ';
            line += cells[c];
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::map<Tuple, Poly> mlq_family(const Tuple& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::map<Tuple, Poly> fam;
    for (const Tuple& mu : rearrangement_class(lambda)) fam.emplace(mu, Poly(n));
    for (const MultilineQueue& q : enumerate_mlq(lambda, n)) {
        auto it = fam.find(bully_paths(q).bottom_word);
        if (it == fam.end())
            throw std::logic_error("multiline queues: bottom word escaped the rearrangement class");
        it->second += q.weight();
    }
    return fam;
}

namespace {

void check_signal(const Rat& p) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("correlations: p outside (0,1)");
}

// The direction weight: correlation_e with the (i,j)-independent prefactor removed.
Rat adjacency_weight(int n, int i, int j, const Rat& p) {
    Rat num = Rat(j - i) * (Rat(2 * n) - Rat(i + j - 1) * p);
    Rat den = (Rat(n) - Rat(i) * p) * (Rat(n) - Rat(i - 1) * p) * (Rat(n) - Rat(j) * p) *
              (Rat(n) - Rat(j - 1) * p);
    return num / den;
}

}  // namespace

Rat correlation_e(int n, int i, int j, const Rat& p) {
    if (n < 2) throw std::invalid_argument("correlations: need at least two species");
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("correlations: need 1 <= i < j <= n");
    check_signal(p);
    return Rat(n) * (1 - p) / Rat(n - 1) * adjacency_weight(n, i, j, p);
}

Rat correlation_d(int n, int k, int l, const Rat& p) {
    if (n < 2) throw std::invalid_argument("correlations: need at least two species");
    if (k < 0 || l < 0 || k + l > n)
        throw std::invalid_argument("correlations: need k, l >= 0 with k + l <= n");
    check_signal(p);
    Rat num = Rat(l) * Rat(n - k) * Rat(n - k - l);
    Rat den = Rat(n - 1) * (Rat(n) - p * k) * (Rat(n) - p * (k + l));
    return num / den;
}

std::vector<Rat> limit_direction(int n, const Rat& p) {
    if (n < 2) throw std::invalid_argument("limit direction: need at least two species");
    check_signal(p);
    std::vector<Rat> v(n, Rat(0));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rat w = adjacency_weight(n, i, j, p);
            v[i - 1] += w;
            v[j - 1] -= w;
        }
    return v;
}

std::vector<Rat> limit_direction_from_family(int n, const Rat& p) {
    if (n < 2) throw std::invalid_argument("limit direction: need at least two species");
    check_signal(p);
    Tuple lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = i + 1;
    PolyFamily fam = build_f_family(lambda, Rat(0));
    std::vector<Rat> x(n, Rat(1));
    x[n - 1] = 1 - p;
    std::vector<Rat> v(n, Rat(0));
    for (const auto& [mu, f] : fam.members) {
        if (mu.front() >= mu.back()) continue;
        Rat w = f.eval(x);
        v[mu.front() - 1] += w;
        v[mu.back() - 1] -= w;
    }
    return v;
}

}  // namespace alcove
