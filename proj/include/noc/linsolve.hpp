#ifndef NOC_LINSOLVE_HPP
#define NOC_LINSOLVE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "noc/rational.hpp"

namespace noc {

// Incremental exact Gaussian eliminator over Q. Rows are fed one at a time as
// augmented equations sum_i a_i x_i = rhs; the reducer keeps a reduced row
// per pivot column and detects inconsistency (0 = nonzero) on arrival.
class RowReducer {
  public:
    explicit RowReducer(std::size_t n) : n_(n) {}

    std::size_t unknowns() const { return n_; }
    std::size_t rank() const { return pivots_.size(); }
    bool inconsistent() const { return inconsistent_; }
    bool full_rank() const { return rank() == n_; }

    // returns true if the row added a new pivot
    bool add_row(std::vector<Rational> row, Rational rhs) {
        if (row.size() != n_) throw std::invalid_argument("RowReducer: bad row size");
        reduce(row, rhs);
        std::size_t col = first_nonzero(row);
        if (col == n_) {
            if (!rhs.is_zero()) inconsistent_ = true;
            return false;
        }
        Rational inv = row[col].inv();
        for (auto& v : row) v *= inv;
        rhs *= inv;
        // back-eliminate the new pivot from existing rows
        for (auto& [pc, pr] : pivots_) {
            Rational f = pr.first[col];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < n_; ++i) pr.first[i] -= f * row[i];
            pr.second -= f * rhs;
        }
        pivots_.emplace(col, std::make_pair(std::move(row), std::move(rhs)));
        return true;
    }

    // unique solution when full rank and consistent
    std::optional<std::vector<Rational>> solve_unique() const {
        if (inconsistent_ || !full_rank()) return std::nullopt;
        std::vector<Rational> x(n_);
        for (const auto& [col, pr] : pivots_) x[col] = pr.second;
        return x;
    }

    // any solution with free variables set to zero (consistent systems only)
    std::optional<std::vector<Rational>> solve_particular() const {
        if (inconsistent_) return std::nullopt;
        std::vector<Rational> x(n_, Rational(0));
        // pivot rows are fully reduced against each other, so each pivot
        // row reads x_pivot + sum_{free} a_j x_j = rhs
        for (const auto& [col, pr] : pivots_) x[col] = pr.second;
        return x;
    }

    long nullity() const { return static_cast<long>(n_) - static_cast<long>(rank()); }

    // basis of the homogeneous kernel (one vector per free column)
    std::vector<std::vector<Rational>> kernel_basis() const {
        std::vector<std::vector<Rational>> out;
        for (std::size_t f = 0; f < n_; ++f) {
            if (pivots_.count(f)) continue;
            std::vector<Rational> v(n_, Rational(0));
            v[f] = Rational(1);
            for (const auto& [col, pr] : pivots_) v[col] = -pr.first[f];
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    void reduce(std::vector<Rational>& row, Rational& rhs) const {
        for (const auto& [col, pr] : pivots_) {
            Rational f = row[col];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < n_; ++i) row[i] -= f * pr.first[i];
            rhs -= f * pr.second;
        }
    }
    std::size_t first_nonzero(const std::vector<Rational>& row) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!row[i].is_zero()) return i;
        return n_;
    }

    std::size_t n_;
    bool inconsistent_ = false;
    std::map<std::size_t, std::pair<std::vector<Rational>, Rational>> pivots_;
};

struct LinearSolution {
    enum class Kind { unique, affine_space, inconsistent } kind;
    std::vector<Rational> solution; // unique solution, or a particular one
    long solspace_dim = 0;          // dimension of the solution set (0 when unique)
};

// rows[i] paired with rhs[i]; reports exact solvability structure
inline LinearSolution solve_linear(const std::vector<std::vector<Rational>>& rows,
                                   const std::vector<Rational>& rhs, std::size_t unknowns) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
    RowReducer red(unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i) red.add_row(rows[i], rhs[i]);
    LinearSolution out;
    if (red.inconsistent()) {
        out.kind = LinearSolution::Kind::inconsistent;
        return out;
    }
    if (red.full_rank()) {
        out.kind = LinearSolution::Kind::unique;
        out.solution = *red.solve_unique();
        return out;
    }
    out.kind = LinearSolution::Kind::affine_space;
    out.solspace_dim = red.nullity();
    out.solution = *red.solve_particular();
    return out;
}

// rank of a rational matrix
inline std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RowReducer red(cols);
    for (const auto& r : rows) red.add_row(r, Rational(0));
    return red.rank();
}

} // namespace noc

#endif
