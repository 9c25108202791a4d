#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

using RatRow = std::vector<Rat>;

// Incremental reduced row echelon accumulator over Q^width. Rows are fed one at a
// time; fully dependent rows are discarded on arrival, so callers can stop feeding
// once the rank (or nullity) they need is reached.
class Rref {
public:
    explicit Rref(std::size_t width) : width_(width), col_to_row_(width, -1) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t nullity() const { return width_ - rows_.size(); }

    // Returns true when the row was independent (rank grew).
    bool add_row(RatRow row) {
        if (row.size() != width_) throw std::invalid_argument("Rref: row width mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& x = row[pivot_col_[r]];
            if (x != 0) {
                Rat f = x;  // rows_ are normalized to pivot 1
                for (std::size_t j = 0; j < width_; ++j) row[j] -= f * rows_[r][j];
            }
        }
        std::size_t p = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p == width_) return false;
        Rat inv = 1 / row[p];
        for (std::size_t j = p; j < width_; ++j) row[j] *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& x = rows_[r][p];
            if (x != 0) {
                Rat f = x;
                for (std::size_t j = 0; j < width_; ++j) rows_[r][j] -= f * row[j];
            }
        }
        col_to_row_[p] = static_cast<int>(rows_.size());
        pivot_col_.push_back(p);
        rows_.push_back(std::move(row));
        return true;
    }

    // Basis of the solution space of the homogeneous system.
    std::vector<RatRow> nullspace() const {
        std::vector<RatRow> basis;
        for (std::size_t j = 0; j < width_; ++j) {
            if (col_to_row_[j] >= 0) continue;
            RatRow v(width_, Rat(0));
            v[j] = 1;
            for (std::size_t r = 0; r < rows_.size(); ++r) v[pivot_col_[r]] = -rows_[r][j];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t width_;
    std::vector<RatRow> rows_;
    std::vector<std::size_t> pivot_col_;
    std::vector<int> col_to_row_;
};

// Solves the (possibly overdetermined) system given as rows [a_1 .. a_n | b] with the
// rhs in the last column. Returns the unique solution, or nullopt when the system is
// inconsistent or underdetermined.
inline std::optional<std::vector<Rat>> solve_exact(const std::vector<RatRow>& augmented_rows,
                                                   std::size_t unknowns) {
    Rref acc(unknowns + 1);
    for (const RatRow& row : augmented_rows) {
        if (row.size() != unknowns + 1) throw std::invalid_argument("solve_exact: bad row width");
        acc.add_row(row);
    }
    std::vector<RatRow> basis = acc.nullspace();
    // Consistent with a unique solution iff the nullspace is spanned by one vector
    // whose rhs coordinate is nonzero (the homogenizing direction).
    if (basis.size() != 1) return std::nullopt;
    const RatRow& v = basis.front();
    if (v[unknowns] == 0) return std::nullopt;
    Rat scale = -1 / v[unknowns];
    std::vector<Rat> x(unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) x[j] = v[j] * scale;
    return x;
}

}  // namespace alcove
