#include "lefschetz/hessians.hpp"

#include <algorithm>

#include "lefschetz/artinian.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

FormMatrix hessian_matrix(const Form& f) {
    if (f.degree() < 2) throw DegreeTooSmall("Hessian needs degree at least 2");
    const size_t n = f.nvars();
    FormMatrix m(n, std::vector<Form>(n));
    for (size_t i = 0; i < n; ++i) {
        const Form di = f.derivative(i);
        for (size_t j = i; j < n; ++j) {
            m[i][j] = di.derivative(j);
            if (j != i) m[j][i] = m[i][j];
        }
    }
    return m;
}

Form det_symbolic(const FormMatrix& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw NotSquare("symbolic determinant of a non-square matrix");
    if (n == 0) return Form({}, 0);
    const auto& vars = m[0][0].vars();

    // expansion state: active rows + active column mask
    std::vector<size_t> rows(n);
    for (size_t i = 0; i < n; ++i) rows[i] = i;
    std::vector<bool> col_active(n, true);

    auto rec = [&](auto&& self, std::vector<size_t> active_rows) -> Form {
        const size_t sz = active_rows.size();
        std::vector<size_t> cols;
        for (size_t c = 0; c < n; ++c)
            if (col_active[c]) cols.push_back(c);
        if (sz == 0) return Form::constant(vars, Rational(1));
        if (sz == 1) return m[active_rows[0]][cols[0]];
        // expand along the row with the fewest nonzero entries
        size_t best = 0, best_nz = sz + 1;
        for (size_t r = 0; r < sz; ++r) {
            size_t nz = 0;
            for (size_t c : cols)
                if (!m[active_rows[r]][c].is_zero()) ++nz;
            if (nz < best_nz) {
                best_nz = nz;
                best = r;
            }
        }
        if (best_nz == 0) return Form(vars, 0);
        const size_t row = active_rows[best];
        std::vector<size_t> rest;
        for (size_t r : active_rows)
            if (r != row) rest.push_back(r);
        Form total(vars, 0);
        bool total_set = false;
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            const size_t c = cols[ci];
            if (m[row][c].is_zero()) continue;
            col_active[c] = false;
            Form minor = self(self, rest);
            col_active[c] = true;
            if (minor.is_zero()) continue;
            Form term = m[row][c] * minor;
            if ((best + ci) % 2 == 1) term = -term;
            total = total_set ? total + term : term;
            total_set = true;
        }
        return total_set ? total : Form(vars, 0);
    };
    return rec(rec, rows);
}

FormMatrix hessian_entries_for_basis(const Form& f, const std::vector<Form>& basis) {
    const size_t n = basis.size();
    FormMatrix entries(n, std::vector<Form>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            entries[i][j] = apply_operator(basis[i] * basis[j], f);
            if (j != i) entries[j][i] = entries[i][j];
        }
    return entries;
}

HessianSpec higher_hessian(const Form& f, unsigned k) {
    if (2 * k > f.degree()) throw DegreeOutOfRange("higher Hessian level exceeds half the degree");
    HessianSpec spec;
    spec.f = f;
    spec.k = k;
    spec.basis = basis_of_Ak(f, k);
    std::vector<Form> ops;
    ops.reserve(spec.basis.size());
    for (const auto& m : spec.basis) ops.push_back(Form::monomial_form(f.vars(), m, Rational(1)));
    spec.entries = hessian_entries_for_basis(f, ops);
    return spec;
}

std::string vanish_status_name(VanishStatus s) {
    switch (s) {
        case VanishStatus::NonzeroCertified: return "NonzeroCertified";
        case VanishStatus::ZeroProbabilistic: return "ZeroProbabilistic";
        case VanishStatus::ZeroSymbolic: return "ZeroSymbolic";
    }
    return "?";
}

namespace {

QMatrix evaluate_matrix(const FormMatrix& m, const std::vector<Rational>& point) {
    QMatrix out(static_cast<long>(m.size()), static_cast<long>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            out.at(static_cast<long>(i), static_cast<long>(j)) = m[i][j].evaluate(point);
    return out;
}

}  // namespace

VanishingVerdict vanishing_verdict(const FormMatrix& m, const VanishOptions& opts) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw NotSquare("vanishing verdict needs a square matrix");
    if (n == 0) return {VanishStatus::NonzeroCertified, std::vector<Rational>{}, 0};
    const size_t nvars = m[0][0].nvars();
    Rng rng(opts.seed);

    unsigned entry_deg = 0;
    bool all_zero = true;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) {
                all_zero = false;
                entry_deg = std::max(entry_deg, e.degree());
            }
    if (all_zero) return {VanishStatus::ZeroSymbolic, std::nullopt, 0};

    if (static_cast<long>(n) <= opts.symbolic_max_size) {
        const Form d = det_symbolic(m);
        if (d.is_zero()) return {VanishStatus::ZeroSymbolic, std::nullopt, 0};
        // determinant is a nonzero polynomial; certify with an explicit point
        for (int attempt = 0; attempt < 200; ++attempt) {
            const auto p = rng.point(nvars, opts.coord_bound + attempt / 20);
            if (d.evaluate(p) != 0) return {VanishStatus::NonzeroCertified, p, attempt + 1};
        }
        throw Error("failed to certify a nonzero determinant with a point");
    }

    // random-line probing: deg(det restricted to a line) <= entry_deg * n,
    // so entry_deg*n + 1 zero values force the restriction to vanish
    const long degree_bound = static_cast<long>(entry_deg) * static_cast<long>(n);
    int trials = 0;
    for (int line = 0; line < opts.lines; ++line) {
        const auto p = rng.point(nvars, opts.coord_bound);
        std::vector<Rational> q;
        do {
            q = rng.point(nvars, opts.coord_bound);
        } while (std::all_of(q.begin(), q.end(), [](const Rational& c) { return c == 0; }));
        for (long t = 0; t <= degree_bound; ++t) {
            std::vector<Rational> pt(nvars);
            for (size_t i = 0; i < nvars; ++i) pt[i] = p[i] + Rational(t) * q[i];
            ++trials;
            if (det(evaluate_matrix(m, pt)) != 0)
                return {VanishStatus::NonzeroCertified, pt, trials};
        }
    }
    return {VanishStatus::ZeroProbabilistic, std::nullopt, trials};
}

long hessian_generic_rank(const Form& f, uint64_t seed, int points) {
    const FormMatrix m = hessian_matrix(f);
    Rng rng(seed);
    long best = 0;
    for (int i = 0; i < points; ++i) {
        const auto p = rng.point(f.nvars(), 9);
        best = std::max(best, rank(evaluate_matrix(m, p)));
    }
    return best;
}

}  // namespace lefschetz
