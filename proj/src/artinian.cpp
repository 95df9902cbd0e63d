#include "lefschetz/artinian.hpp"

#include <map>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

QMatrix contraction_matrix(const Form& f, unsigned k) {
    if (k > f.degree()) throw DegreeOutOfRange("contraction degree exceeds socle degree");
    const size_t n = f.nvars();
    const std::vector<Monomial> rows = monomials_of_degree(n, f.degree() - k);
    const std::vector<Monomial> cols = monomials_of_degree(n, k);
    std::map<Monomial, long, LexDescending> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<long>(i));

    QMatrix m(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        const Monomial& q = cols[j];
        for (const auto& [mf, cf] : f.terms()) {
            if (!q.divides(mf)) continue;
            Rational c = cf;
            for (size_t v = 0; v < q.e.size(); ++v)
                if (q.e[v] > 0) c *= Rational(falling_factorial(mf.e[v], q.e[v]));
            m.at(row_index.at(mf / q), static_cast<long>(j)) += c;
        }
    }
    return m;
}

std::vector<Form> ann_graded_basis(const Form& f, unsigned k) {
    const std::vector<Monomial> cols = monomials_of_degree(f.nvars(), k);
    std::vector<Form> out;
    if (k > f.degree()) {
        for (const auto& m : cols) out.push_back(Form::monomial_form(f.vars(), m, Rational(1)));
        return out;
    }
    const auto kernel = kernel_basis(contraction_matrix(f, k));
    for (const auto& v : kernel) {
        Form::TermMap terms;
        for (size_t j = 0; j < cols.size(); ++j)
            if (v[j] != 0) terms.emplace(cols[j], v[j]);
        out.push_back(Form::from_terms(f.vars(), terms, k));
    }
    return out;
}

HilbertVector hilbert_vector(const Form& f) {
    if (f.is_zero()) throw ZeroFormError("Hilbert vector of the zero form");
    HilbertVector h;
    for (unsigned k = 0; k <= f.degree(); ++k) {
        const QMatrix m = contraction_matrix(f, k);
        h.push_back(rank(m));
    }
    return h;
}

std::vector<Monomial> basis_of_Ak(const Form& f, unsigned k) {
    if (k > f.degree()) throw DegreeOutOfRange("degree exceeds socle degree");
    const QMatrix m = contraction_matrix(f, k);
    const std::vector<Monomial> cols = monomials_of_degree(f.nvars(), k);

    std::vector<Monomial> chosen;
    std::vector<long> chosen_idx;
    long current_rank = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        QMatrix sub(m.rows(), static_cast<long>(chosen_idx.size()) + 1);
        for (long r = 0; r < m.rows(); ++r) {
            for (size_t t = 0; t < chosen_idx.size(); ++t) sub.at(r, static_cast<long>(t)) = m.at(r, chosen_idx[t]);
            sub.at(r, static_cast<long>(chosen_idx.size())) = m.at(r, static_cast<long>(j));
        }
        if (rank(sub) > current_rank) {
            ++current_rank;
            chosen.push_back(cols[j]);
            chosen_idx.push_back(static_cast<long>(j));
        }
    }
    return chosen;
}

QMatrix multiplication_matrix(const Form& f, const Form& L, unsigned i, unsigned c) {
    if (i + c > f.degree()) throw DegreeOutOfRange("target degree exceeds socle degree");
    const unsigned t = i + c;
    const std::vector<Monomial> src = basis_of_Ak(f, i);
    const std::vector<Monomial> dst = basis_of_Ak(f, t);

    // contraction vectors identify classes: [p] = [q] in A_t iff p.f = q.f
    const std::vector<Monomial> target_monos = monomials_of_degree(f.nvars(), f.degree() - t);
    std::map<Monomial, long, LexDescending> tgt_index;
    for (size_t r = 0; r < target_monos.size(); ++r) tgt_index.emplace(target_monos[r], static_cast<long>(r));

    auto contraction_vec = [&](const Form& op) {
        const Form g = apply_operator(op, f);
        std::vector<Rational> v(target_monos.size(), Rational(0));
        for (const auto& [m, cc] : g.terms()) v[static_cast<size_t>(tgt_index.at(m))] = cc;
        return v;
    };

    QMatrix basis_cols(static_cast<long>(target_monos.size()), static_cast<long>(dst.size()));
    for (size_t jj = 0; jj < dst.size(); ++jj) {
        const auto v = contraction_vec(Form::monomial_form(f.vars(), dst[jj], Rational(1)));
        for (size_t r = 0; r < v.size(); ++r) basis_cols.at(static_cast<long>(r), static_cast<long>(jj)) = v[r];
    }

    const Form lc = L.pow(c);
    QMatrix out(static_cast<long>(dst.size()), static_cast<long>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        const Form image = lc * Form::monomial_form(f.vars(), src[j], Rational(1));
        bool unique = false;
        const auto x = solve(basis_cols, contraction_vec(image), &unique);
        if (!x || !unique) throw SingularBasis("chosen basis does not span the image class");
        for (size_t r = 0; r < x->size(); ++r) out.at(static_cast<long>(r), static_cast<long>(j)) = (*x)[r];
    }
    return out;
}

GradedAlgebraView GradedAlgebraView::build(const Form& f) {
    if (f.is_zero()) throw ZeroFormError("graded view of the zero form");
    GradedAlgebraView view;
    view.f = f;
    view.socle_degree = f.degree();
    for (unsigned k = 0; k <= f.degree(); ++k) {
        GradedPiece piece;
        piece.ann_basis = ann_graded_basis(f, k);
        piece.basis = basis_of_Ak(f, k);
        piece.h = static_cast<long long>(piece.basis.size());
        view.pieces.push_back(std::move(piece));
    }
    return view;
}

HilbertVector GradedAlgebraView::h_vector() const {
    HilbertVector h;
    for (const auto& p : pieces) h.push_back(p.h);
    return h;
}

AnnSetReport verify_annihilator_set(const Form& f, const std::vector<Form>& gens) {
    AnnSetReport report;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree() <= f.degree() && !apply_operator(gens[i], f).is_zero()) {
            report.all_annihilate = false;
            report.failing_generators.push_back(i);
        }
    }
    for (unsigned k = 0; k <= f.degree(); ++k) {
        const std::vector<Monomial> sk = monomials_of_degree(f.nvars(), k);
        std::map<Monomial, long, LexDescending> idx;
        for (size_t i = 0; i < sk.size(); ++i) idx.emplace(sk[i], static_cast<long>(i));

        // rows = coefficient vectors of m*g for every generator g and every
        // monomial m of complementary degree
        std::vector<std::vector<Rational>> rows;
        for (const auto& g : gens) {
            if (g.degree() > k) continue;
            for (const auto& m : monomials_of_degree(f.nvars(), k - g.degree())) {
                const Form prod = Form::monomial_form(f.vars(), m, Rational(1)) * g;
                std::vector<Rational> row(sk.size(), Rational(0));
                for (const auto& [mm, cc] : prod.terms()) row[static_cast<size_t>(idx.at(mm))] = cc;
                rows.push_back(std::move(row));
            }
        }
        QMatrix span(static_cast<long>(rows.size()), static_cast<long>(sk.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t cidx = 0; cidx < sk.size(); ++cidx)
                span.at(static_cast<long>(r), static_cast<long>(cidx)) = rows[r][cidx];
        const long long dim_span = rank(span);
        const long long dim_ann =
            static_cast<long long>(sk.size()) - rank(contraction_matrix(f, k));
        report.per_degree.emplace_back(k, dim_span, dim_ann);
        if (dim_span != dim_ann) report.mismatched_degrees.push_back(k);
    }
    return report;
}

std::string AnnSetReport::str() const {
    std::ostringstream os;
    os << (ok() ? "annihilator set verified" : "annihilator set mismatch") << "\n";
    if (!all_annihilate) {
        os << "  generators failing to annihilate:";
        for (size_t i : failing_generators) os << " #" << i;
        os << "\n";
    }
    for (const auto& [k, span, ann] : per_degree)
        os << "  degree " << k << ": span " << span << ", annihilator " << ann
           << (span == ann ? "" : "   <-- differs") << "\n";
    return os.str();
}

}  // namespace lefschetz
