#include "lefschetz/matrix.hpp"

#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

QMatrix QMatrix::identity(long n) {
    QMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> QMatrix::mul(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw ArityMismatch("matrix-vector size mismatch");
    std::vector<Rational> out(static_cast<size_t>(rows_), Rational(0));
    for (long r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (long c = 0; c < cols_; ++c) s += at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = s;
    }
    return out;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (long r = 0; r < rows_; ++r) {
        for (long c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c).get_str();
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Integer matrix with the same row space: each row scaled by the lcm of its
// denominators.
std::vector<std::vector<Integer>> integral_rows(const QMatrix& m, std::vector<Integer>* scales = nullptr) {
    std::vector<std::vector<Integer>> a(static_cast<size_t>(m.rows()),
                                        std::vector<Integer>(static_cast<size_t>(m.cols())));
    for (long r = 0; r < m.rows(); ++r) {
        Integer lcm = 1;
        for (long c = 0; c < m.cols(); ++c) {
            Integer l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
            lcm = l;
        }
        for (long c = 0; c < m.cols(); ++c) {
            Rational s = m.at(r, c) * Rational(lcm);
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] = s.get_num();
        }
        if (scales) scales->push_back(lcm);
    }
    return a;
}

// Fraction-free elimination with row pivoting (first nonzero, row-major scan)
// and column skips on rank-deficient columns. Entries stay integral: each is a
// minor of the input. Returns the pivot count; fills det_value for square
// matrices (sign-adjusted last pivot) when requested.
long bareiss(std::vector<std::vector<Integer>>& a, Integer* det_value) {
    const long rows = static_cast<long>(a.size());
    const long cols = rows == 0 ? 0 : static_cast<long>(a[0].size());
    Integer prev = 1;
    long row = 0;
    int sign = 1;
    for (long col = 0; col < cols && row < rows; ++col) {
        long p = -1;
        for (long r = row; r < rows; ++r)
            if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(row)]);
            sign = -sign;
        }
        const Integer pivot = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (long r = row + 1; r < rows; ++r) {
            for (long c = col + 1; c < cols; ++c) {
                Integer t = a[static_cast<size_t>(r)][static_cast<size_t>(c)] * pivot -
                            a[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                                a[static_cast<size_t>(row)][static_cast<size_t>(c)];
                mpz_divexact(a[static_cast<size_t>(r)][static_cast<size_t>(c)].get_mpz_t(),
                             t.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
        }
        prev = pivot;
        ++row;
    }
    if (det_value) {
        if (row < rows) {
            *det_value = 0;
        } else {
            *det_value = sign > 0 ? prev : -prev;
        }
    }
    return row;
}

struct Rref {
    std::vector<std::vector<Rational>> m;
    std::vector<long> pivot_cols;
};

Rref rref_of(const QMatrix& q, const std::vector<Rational>* rhs) {
    const long rows = q.rows();
    const long cols = q.cols() + (rhs ? 1 : 0);
    Rref out;
    out.m.assign(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols), Rational(0)));
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < q.cols(); ++c) out.m[static_cast<size_t>(r)][static_cast<size_t>(c)] = q.at(r, c);
        if (rhs) out.m[static_cast<size_t>(r)][static_cast<size_t>(q.cols())] = (*rhs)[static_cast<size_t>(r)];
    }
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long p = -1;
        for (long r = row; r < rows; ++r)
            if (out.m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(out.m[static_cast<size_t>(p)], out.m[static_cast<size_t>(row)]);
        const Rational inv = 1 / out.m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (long c = col; c < cols; ++c) out.m[static_cast<size_t>(row)][static_cast<size_t>(c)] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || out.m[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            const Rational f = out.m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            for (long c = col; c < cols; ++c)
                out.m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * out.m[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

}  // namespace

long rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = integral_rows(m);
    return bareiss(a, nullptr);
}

Rational det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    std::vector<Integer> scales;
    auto a = integral_rows(m, &scales);
    Integer d;
    bareiss(a, &d);
    Rational out(d);
    for (const auto& s : scales) out /= Rational(s);
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    const long cols = m.cols();
    std::vector<std::vector<Rational>> basis;
    if (cols == 0) return basis;
    if (m.rows() == 0) {
        for (long j = 0; j < cols; ++j) {
            std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
            v[static_cast<size_t>(j)] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const Rref r = rref_of(m, nullptr);
    std::vector<long> pivot_row_of_col(static_cast<size_t>(cols), -1);
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
        pivot_row_of_col[static_cast<size_t>(r.pivot_cols[i])] = static_cast<long>(i);
    for (long j = 0; j < cols; ++j) {
        if (pivot_row_of_col[static_cast<size_t>(j)] >= 0) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(j)] = 1;
        for (long c = 0; c < cols; ++c) {
            const long pr = pivot_row_of_col[static_cast<size_t>(c)];
            if (pr >= 0) v[static_cast<size_t>(c)] = -r.m[static_cast<size_t>(pr)][static_cast<size_t>(j)];
        }
        normalize_integral(v);  // integral, content 1, first nonzero positive
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b, bool* unique) {
    if (static_cast<long>(b.size()) != a.rows()) throw ArityMismatch("rhs size mismatch");
    const Rref r = rref_of(a, &b);
    for (long p : r.pivot_cols)
        if (p == a.cols()) return std::nullopt;
    if (unique) *unique = static_cast<long>(r.pivot_cols.size()) == a.cols();
    std::vector<Rational> x(static_cast<size_t>(a.cols()), Rational(0));
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
        x[static_cast<size_t>(r.pivot_cols[i])] = r.m[i][static_cast<size_t>(a.cols())];
    return x;
}

}  // namespace lefschetz
