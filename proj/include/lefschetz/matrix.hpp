#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

// Dense matrix of exact rationals. Values are immutable in spirit: every
// operation returns fresh data, so concurrent reads are safe.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Rational(0)) {}

    static QMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational& at(long r, long c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    const Rational& at(long r, long c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

    QMatrix transpose() const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::vector<Rational> mul(const std::vector<Rational>& v) const;
    std::string str() const;

  private:
    long rows_, cols_;
    std::vector<Rational> a_;
};

// Exact rank by fraction-free (Bareiss) elimination. Rows are scaled to
// integers first, so every intermediate value is an integer minor of the
// scaled matrix. Pivot rule: first nonzero entry in row-major order.
long rank(const QMatrix& m);

// Exact determinant of a square matrix (Bareiss, with row-scale bookkeeping).
Rational det(const QMatrix& m);

// Basis of the right null space. dim = cols - rank. Vectors are scaled to
// integer entries with content 1 and first nonzero entry positive, ordered by
// free column (column-echelon order).
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// One exact solution of A x = b (free variables set to zero), or nullopt if
// the system is inconsistent. `unique` reports whether there were no free
// columns.
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b,
                                           bool* unique = nullptr);

// Reduced row echelon form over an arbitrary field (used for Gaussian
// rationals). Returns pivot columns.
template <class F>
std::vector<long> generic_rref(std::vector<std::vector<F>>& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long p = -1;
        for (long r = row; r < rows; ++r)
            if (!(m[r][col] == F())) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        const F inv = F(Rational(1)) / m[row][col];
        for (long c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == F()) continue;
            const F factor = m[r][col];
            for (long c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::optional<std::vector<F>> generic_solve(std::vector<std::vector<F>> a, const std::vector<F>& b) {
    const long rows = static_cast<long>(a.size());
    const long cols = rows == 0 ? 0 : static_cast<long>(a[0].size());
    for (long r = 0; r < rows; ++r) a[r].push_back(b[static_cast<size_t>(r)]);
    const std::vector<long> pivots = generic_rref(a);
    for (long p : pivots)
        if (p == cols) return std::nullopt;
    std::vector<F> x(static_cast<size_t>(cols), F());
    for (size_t i = 0; i < pivots.size(); ++i) x[static_cast<size_t>(pivots[i])] = a[i][static_cast<size_t>(cols)];
    return x;
}

}  // namespace lefschetz
