#include "lefschetz/perazzo.hpp"

#include <algorithm>

#include "lefschetz/errors.hpp"

namespace lefschetz {

const std::vector<std::string>& PerazzoForm::var_names() {
    static const std::vector<std::string> names{"x0", "x1", "x2", "u", "v"};
    return names;
}

namespace {

Form assemble(const BinaryForm& p0, const BinaryForm& p1, const BinaryForm& p2, const BinaryForm& g) {
    const auto& vars = PerazzoForm::var_names();
    Form::TermMap terms;
    const BinaryForm* ps[3] = {&p0, &p1, &p2};
    for (int i = 0; i < 3; ++i) {
        const auto plain = ps[i]->plain_coeffs();
        for (size_t j = 0; j < plain.size(); ++j) {
            if (plain[j] == 0) continue;
            Monomial m(5);
            m.e[static_cast<size_t>(i)] = 1;
            m.e[3] = ps[i]->t - static_cast<unsigned>(j);
            m.e[4] = static_cast<unsigned>(j);
            terms.emplace(m, plain[j]);
        }
    }
    const auto gplain = g.plain_coeffs();
    for (size_t j = 0; j < gplain.size(); ++j) {
        if (gplain[j] == 0) continue;
        Monomial m(5);
        m.e[3] = g.t - static_cast<unsigned>(j);
        m.e[4] = static_cast<unsigned>(j);
        auto it = terms.find(m);
        if (it == terms.end())
            terms.emplace(m, gplain[j]);
        else
            it->second += gplain[j];
    }
    return Form::from_terms(vars, terms, g.t);
}

}  // namespace

PerazzoForm build_perazzo(const BinaryForm& p0, const BinaryForm& p1, const BinaryForm& p2,
                          const BinaryForm& g) {
    if (p0.t != p1.t || p1.t != p2.t) throw DegreeMismatch("p0, p1, p2 must share their degree");
    const unsigned d = p0.t + 1;
    if (d < 3) throw DegreeTooSmall("a Perazzo form has degree at least 3");
    if (g.t != d) throw DegreeMismatch("g must have degree d");

    QMatrix coeffs(3, static_cast<long>(d));
    const BinaryForm* ps[3] = {&p0, &p1, &p2};
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < static_cast<long>(d); ++j) coeffs.at(i, j) = ps[i]->h[static_cast<size_t>(j)];
    if (rank(coeffs) < 3) throw LinearlyDependent("p0, p1, p2 must be linearly independent");

    PerazzoForm f;
    f.d = d;
    f.p0 = p0;
    f.p1 = p1;
    f.p2 = p2;
    f.g = g;
    f.assembled = assemble(p0, p1, p2, g);
    return f;
}

BlockMatrices block_matrices(const PerazzoForm& f, unsigned k) {
    if (k < 1 || k > f.d - 1) throw DegreeOutOfRange("block level out of range");
    BlockMatrices out;
    out.A = cat_matrix(f.p0, k);
    out.B = cat_matrix(f.p1, k);
    out.C = cat_matrix(f.p2, k);
    out.G = cat_matrix(f.g, k);

    const QMatrix a1 = cat_matrix(f.p0, k - 1);
    const QMatrix b1 = cat_matrix(f.p1, k - 1);
    const QMatrix c1 = cat_matrix(f.p2, k - 1);
    out.M = QMatrix(a1.rows(), 3 * a1.cols());
    for (long r = 0; r < a1.rows(); ++r)
        for (long c = 0; c < a1.cols(); ++c) {
            out.M.at(r, c) = a1.at(r, c);
            out.M.at(r, c + a1.cols()) = b1.at(r, c);
            out.M.at(r, c + 2 * a1.cols()) = c1.at(r, c);
        }

    const long rows_each = out.A.rows();
    out.N = QMatrix(3 * rows_each, out.A.cols());
    for (long r = 0; r < rows_each; ++r)
        for (long c = 0; c < out.A.cols(); ++c) {
            out.N.at(r, c) = out.A.at(r, c);
            out.N.at(r + rows_each, c) = out.B.at(r, c);
            out.N.at(r + 2 * rows_each, c) = out.C.at(r, c);
        }
    out.Nprime = QMatrix(3 * rows_each + out.G.rows(), out.A.cols());
    for (long r = 0; r < 3 * rows_each; ++r)
        for (long c = 0; c < out.A.cols(); ++c) out.Nprime.at(r, c) = out.N.at(r, c);
    for (long r = 0; r < out.G.rows(); ++r)
        for (long c = 0; c < out.G.cols(); ++c) out.Nprime.at(r + 3 * rows_each, c) = out.G.at(r, c);
    return out;
}

HilbertVector perazzo_hilbert(const PerazzoForm& f) {
    if (is_cone(f.assembled)) throw IsConeError("h-vector formula assumes the form is not a cone");
    const unsigned d = f.d;
    HilbertVector h(d + 1, 0);
    h[0] = h[d] = 1;
    if (d >= 2) h[1] = h[d - 1] = 5;
    for (unsigned k = 2; k <= d / 2; ++k) {
        const BlockMatrices bm = block_matrices(f, k);
        h[k] = rank(bm.M) + rank(bm.Nprime);
        h[d - k] = h[k];
    }
    return h;
}

bool is_cone(const Form& f) {
    const auto parts = f.partials();
    const unsigned deg = f.degree() == 0 ? 0 : f.degree() - 1;
    const auto monos = monomials_of_degree(f.nvars(), deg);
    std::map<Monomial, long, LexDescending> idx;
    for (size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], static_cast<long>(i));
    QMatrix m(static_cast<long>(parts.size()), static_cast<long>(monos.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (const auto& [mm, cc] : parts[i].terms()) m.at(static_cast<long>(i), idx.at(mm)) = cc;
    return rank(m) < static_cast<long>(f.nvars());
}

PerazzoForm maximal_example(unsigned d) {
    if (d < 4) throw DegreeTooSmall("maximal example needs degree at least 4");
    const unsigned r = d / 3;
    const unsigned eps = d % 3;
    auto piece = [&](unsigned lo, unsigned hi) {
        std::vector<Rational> coords(d, Rational(0));
        for (unsigned i = lo; i <= hi; ++i) coords[i] = Rational(1, 1 + static_cast<long>(i));
        return BinaryForm(d - 1, coords);
    };
    const BinaryForm p0 = piece(0, r);
    const BinaryForm p1 = piece(r, 2 * r - 1 + eps);
    const BinaryForm p2 = piece(2 * r - 1 + eps, d - 1);
    return build_perazzo(p0, p1, p2, BinaryForm::zero(d));
}

PerazzoForm minimal_family(MinimalFamily family, unsigned d, const MinimalParams& params) {
    if (d < 4) throw DegreeTooSmall("minimal families are defined for degree at least 4");
    auto unit = [&](unsigned deg, unsigned i) {
        std::vector<Rational> plain(deg + 1, Rational(0));
        plain[i] = 1;
        return BinaryForm::from_plain(plain);
    };
    auto power_of_linear = [&](unsigned deg, const Rational& lambda, const Rational& mu) {
        // (lambda*u + mu*v)^deg has normalized coordinates lambda^{deg-i} mu^i
        std::vector<Rational> coords(deg + 1);
        for (unsigned i = 0; i <= deg; ++i) coords[i] = rat_pow(lambda, deg - i) * rat_pow(mu, i);
        return BinaryForm(deg, coords);
    };

    BinaryForm p0 = unit(d - 1, 0);
    BinaryForm p1, p2, g;
    std::vector<Rational> gplain(d + 1, Rational(0));
    switch (family) {
        case MinimalFamily::I:
            p1 = unit(d - 1, 1);
            p2 = unit(d - 1, 2);
            gplain[0] = params.a;
            gplain[1] = params.b;
            gplain[2] = params.c;
            break;
        case MinimalFamily::II:
            p1 = unit(d - 1, 1);
            p2 = unit(d - 1, d - 1);
            gplain[0] = params.a;
            gplain[1] = params.b;
            gplain[d] = params.c;
            break;
        case MinimalFamily::III: {
            if (params.lambda == 0 || params.mu == 0)
                throw InvalidParams("family III needs nonzero lambda and mu");
            p1 = power_of_linear(d - 1, params.lambda, params.mu);
            p2 = unit(d - 1, d - 1);
            const BinaryForm mixed = power_of_linear(d, params.lambda, params.mu);
            const auto mixed_plain = mixed.plain_coeffs();
            for (size_t i = 0; i < gplain.size(); ++i) gplain[i] = params.b * mixed_plain[i];
            gplain[0] += params.a;
            gplain[d] += params.c;
            break;
        }
    }
    g = BinaryForm::from_plain(gplain);
    return build_perazzo(p0, p1, p2, g);
}

HilbertVector minimal_hvector(unsigned d) {
    HilbertVector h(d + 1, 6);
    h[0] = h[d] = 1;
    if (d >= 2) {
        h[1] = h[d - 1] = 5;
    }
    return h;
}

HilbertVector maximal_hvector(unsigned d) {
    HilbertVector h(d + 1, 0);
    const unsigned t = d / 4;
    const unsigned low_top = (d % 4 == 3) ? t + 1 : t;  // last level where h_k = 4k+1
    for (unsigned k = 0; k <= d / 2; ++k) {
        h[k] = k <= low_top ? 4LL * k + 1 : static_cast<long long>(d) + 2;
        h[d - k] = h[k];
    }
    return h;
}

std::string extremal_class_name(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::Minimal: return "Minimal";
        case ExtremalClass::Maximal: return "Maximal";
        case ExtremalClass::Intermediate: return "Intermediate";
    }
    return "?";
}

ExtremalResult classify_extremal(const PerazzoForm& f) {
    const HilbertVector h = perazzo_hilbert(f);
    if (h == maximal_hvector(f.d)) return {ExtremalClass::Maximal, h};
    if (h == minimal_hvector(f.d)) return {ExtremalClass::Minimal, h};
    return {ExtremalClass::Intermediate, h};
}

std::optional<PerazzoForm> perazzo_from_form(const Form& f) {
    if (f.nvars() != 5 || f.is_zero() || f.degree() < 3) return std::nullopt;
    const unsigned d = f.degree();
    std::vector<std::vector<Rational>> p_plain(3, std::vector<Rational>(d, Rational(0)));
    std::vector<Rational> g_plain(d + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) {
        const unsigned xdeg = m.e[0] + m.e[1] + m.e[2];
        if (xdeg > 1) return std::nullopt;
        if (xdeg == 0) {
            g_plain[m.e[4]] = c;
        } else {
            const size_t i = m.e[0] == 1 ? 0 : (m.e[1] == 1 ? 1 : 2);
            p_plain[i][m.e[4]] = c;
        }
    }
    try {
        return build_perazzo(BinaryForm::from_plain(p_plain[0]), BinaryForm::from_plain(p_plain[1]),
                             BinaryForm::from_plain(p_plain[2]), BinaryForm::from_plain(g_plain));
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace lefschetz
