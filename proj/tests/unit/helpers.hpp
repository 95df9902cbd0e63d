#pragma once

#include <algorithm>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/perazzo.hpp"
#include "lefschetz/rng.hpp"

namespace testutil {

using namespace lefschetz;

inline Form random_form(Rng& rng, const std::vector<std::string>& vars, unsigned degree,
                        int terms = 4, long bound = 5) {
    const auto monos = monomials_of_degree(vars.size(), degree);
    Form::TermMap tm;
    for (int t = 0; t < terms; ++t) {
        const auto& m = monos[static_cast<size_t>(rng.int_in(0, static_cast<long>(monos.size()) - 1))];
        const Rational c(rng.nonzero_in(-bound, bound));
        auto it = tm.find(m);
        if (it == tm.end())
            tm.emplace(m, c);
        else
            it->second += c;
    }
    Form f = Form::from_terms(vars, tm, degree);
    if (f.is_zero()) {
        f = Form::monomial_form(vars, monos[0], Rational(1));
    }
    return f;
}

inline BinaryForm random_binary(Rng& rng, unsigned degree, long bound = 4) {
    std::vector<Rational> plain(degree + 1);
    bool nonzero = false;
    for (auto& c : plain) {
        c = Rational(rng.int_in(-bound, bound));
        if (c != 0) nonzero = true;
    }
    if (!nonzero) plain[0] = 1;
    return BinaryForm::from_plain(plain);
}

inline PerazzoForm random_perazzo(Rng& rng, unsigned d, bool with_g = true) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            const BinaryForm p0 = random_binary(rng, d - 1);
            const BinaryForm p1 = random_binary(rng, d - 1);
            const BinaryForm p2 = random_binary(rng, d - 1);
            const BinaryForm g =
                with_g && rng.int_in(0, 1) == 1 ? random_binary(rng, d) : BinaryForm::zero(d);
            PerazzoForm f = build_perazzo(p0, p1, p2, g);
            if (!is_cone(f.assembled)) return f;
        } catch (const Error&) {
        }
    }
    throw Error("failed to sample a Perazzo form");
}

// Independent oracle: textbook Gauss-Jordan over the rationals with largest-
// absolute-value pivoting. Deliberately a different algorithm and pivot rule
// than the production elimination.
inline long naive_rank(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    size_t row = 0;
    long rk = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t best = row;
        Rational best_abs = abs(a[row][col]);
        for (size_t r = row + 1; r < rows; ++r) {
            const Rational v = abs(a[r][col]);
            if (v > best_abs) {
                best = r;
                best_abs = v;
            }
        }
        if (best_abs == 0) continue;
        std::swap(a[row], a[best]);
        const Rational inv = 1 / a[row][col];
        for (size_t c = col; c < cols; ++c) a[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rk;
    }
    return rk;
}

inline QMatrix random_int_matrix(Rng& rng, long rows, long cols, long bound = 9) {
    QMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.int_in(-bound, bound));
    return m;
}

inline std::vector<std::vector<Rational>> to_rows(const QMatrix& m) {
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(m.rows()),
                                            std::vector<Rational>(static_cast<size_t>(m.cols())));
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
    return rows;
}

}  // namespace testutil
