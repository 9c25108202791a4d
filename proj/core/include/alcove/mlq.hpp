#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/perm.hpp"
#include "alcove/poly.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Cylindrical ball arrangement on a rows x cols grid: rows are numbered from 0 at the
// top, columns 1..cols wrap around. Rows are stored as sorted column lists. The
// content tuple lambda fixes the ball counts: row r holds one ball for every entry of
// lambda that is at most r.
class MultilineQueue {
public:
    MultilineQueue(int cols, std::vector<std::vector<int>> row_columns);

    int cols() const { return cols_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& row(int r) const { return rows_.at(r); }
    bool has_ball(int r, int c) const;

    // x_1^{g_1} ... x_n^{g_n}, where g_j counts the balls in column j strictly above
    // the bottom row.
    Poly weight() const;

    std::string str() const;  // one text line per row: '.' empty site, 'o' ball

private:
    int cols_;
    std::vector<std::vector<int>> rows_;
};

// All queues with the content of lambda on n = lambda.size() columns, ordered
// row-major lexicographically (row 0 varies slowest). The count equals
// prod_r C(n, #{i : lambda_i <= r}).
std::vector<MultilineQueue> enumerate_mlq(const Tuple& lambda, int n);

// Greedy path labels: path l starts at the leftmost unclaimed ball of its starting
// row and claims, in each lower row, the first unclaimed ball weakly clockwise of its
// current column. Every ball is labeled with its path's starting row.
struct BullyLabeling {
    std::vector<std::vector<int>> labels;  // parallel to the queue's row lists
    Tuple bottom_word;                     // bottom-row labels, left to right
};
BullyLabeling bully_paths(const MultilineQueue& q);

// Queue rendering with each ball replaced by its label.
std::string render_labeled(const MultilineQueue& q, const BullyLabeling& bl);

// The t = 0 members of the ring ASEP family, assembled combinatorially: member mu is
// the weight sum of the queues whose bottom word is mu. Keys are exactly the
// rearrangements of lambda.
std::map<Tuple, Poly> mlq_family(const Tuple& lambda);

// Stationary probability, in the stone-driven ring TASEP on species (1,...,n) with
// signal strength p, that species i sits immediately to the right of species j
// across the seam (site pair (n, 1)), conditioned on the stone placement putting the
// slow stone on the last site. The placement marginal is uniform, so the joint event
// probability is this value divided by the number of placements.
Rat correlation_e(int n, int i, int j, const Rat& p);

// The same conditional event for the three-species coarsening with k zeros and l
// ones: the species-1 block ends at site 1 and the species-2 block starts at site n.
Rat correlation_d(int n, int k, int l, const Rat& p);

// Limit direction of the reduced trajectory driven by the correlations above:
// the (e_i - e_j)-weighted sum of adjacency correlations, with the common positive
// prefactor dropped. Coordinates sum to zero.
std::vector<Rat> limit_direction(int n, const Rat& p);

// The same direction computed from the t = 0 ring family evaluated at
// (1,...,1,1-p), summing e_{mu_1} - e_{mu_n} over members with mu_1 < mu_n.
// Parallel to limit_direction, with a different positive scale.
std::vector<Rat> limit_direction_from_family(int n, const Rat& p);

}  // namespace alcove
