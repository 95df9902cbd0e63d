#include "lefschetz/lefschetz_props.hpp"

#include <algorithm>

#include "lefschetz/artinian.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/perazzo.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

std::string verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "Holds";
        case VerdictStatus::Fails: return "Fails";
        case VerdictStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool is_weak_lefschetz_element_full(const Form& f, const Form& L) {
    if (L.is_zero()) return f.degree() == 0;
    const HilbertVector h = hilbert_vector(f);
    for (unsigned i = 0; i + 1 <= f.degree(); ++i) {
        const QMatrix m = multiplication_matrix(f, L, i, 1);
        if (rank(m) < std::min(h[i], h[i + 1])) return false;
    }
    return true;
}

namespace {

// strictly increasing, then flat, then strictly decreasing
bool sperner_profile(const HilbertVector& h, size_t* flat_lo, size_t* flat_hi) {
    size_t i = 1;
    while (i < h.size() && h[i - 1] < h[i]) ++i;
    const size_t lo = i - 1;
    while (i < h.size() && h[i - 1] == h[i]) ++i;
    const size_t hi = i - 1;
    while (i < h.size() && h[i - 1] > h[i]) ++i;
    if (i < h.size()) return false;
    *flat_lo = lo;
    *flat_hi = hi;
    return true;
}

}  // namespace

bool is_weak_lefschetz_element(const Form& f, const Form& L) {
    if (L.is_zero()) return f.degree() == 0;
    const HilbertVector h = hilbert_vector(f);
    size_t lo = 0, hi = 0;
    if (!sperner_profile(h, &lo, &hi)) return is_weak_lefschetz_element_full(f, L);
    if (hi > lo) {
        // flat middle: one isomorphism settles the scan
        const QMatrix m = multiplication_matrix(f, L, static_cast<unsigned>(lo), 1);
        return rank(m) == h[lo];
    }
    if (lo == 0 || lo + 1 >= h.size()) return true;  // monotone profile, maps of full rank are forced only at peak
    // strict peak at lo: injectivity one step below settles the scan
    const QMatrix m = multiplication_matrix(f, L, static_cast<unsigned>(lo - 1), 1);
    return rank(m) == h[lo - 1];
}

bool structural_zero_block(const Form& f, unsigned k) {
    const auto pf = perazzo_from_form(f);
    if (!pf) throw NotPerazzoShape("structural zero block applies to Perazzo 3-folds");
    const auto basis = basis_of_Ak(f, k);
    std::vector<Monomial> linear_part;
    for (const auto& m : basis)
        if (m.e[0] + m.e[1] + m.e[2] >= 1) linear_part.push_back(m);
    const long long z = static_cast<long long>(linear_part.size());
    const long long hk = static_cast<long long>(basis.size());
    if (2 * z <= hk) return false;
    // the block really is zero: products of two positive-x-degree operators
    // kill a form that is linear in x0, x1, x2
    for (size_t i = 0; i < linear_part.size(); ++i)
        for (size_t j = i; j < linear_part.size(); ++j) {
            const Form op = Form::monomial_form(f.vars(), linear_part[i] * linear_part[j], Rational(1));
            if (!apply_operator(op, f).is_zero()) return false;
        }
    return true;
}

namespace {

Form random_linear_operator(const Form& f, Rng& rng) {
    Form::TermMap terms;
    for (size_t i = 0; i < f.nvars(); ++i) {
        const long c = rng.int_in(-9, 9);
        if (c == 0) continue;
        Monomial m(f.nvars());
        m.e[i] = 1;
        terms.emplace(m, Rational(c));
    }
    if (terms.empty()) {
        Monomial m(f.nvars());
        m.e[0] = 1;
        terms.emplace(m, Rational(1));
    }
    return Form::from_terms(f.vars(), terms, 1);
}

}  // namespace

WlpVerdict wlp_verdict(const Form& f, int trials, uint64_t seed) {
    if (trials < 1) throw InvalidInput("at least one trial required");
    WlpVerdict out;
    const HilbertVector h = hilbert_vector(f);
    const unsigned d = f.degree();

    if (!is_unimodal(h)) {
        out.status = VerdictStatus::Fails;
        out.certificate = "non-unimodal h-vector";
        return out;
    }
    if (!is_SI_sequence(h)) {
        out.status = VerdictStatus::Fails;
        out.certificate = "h-vector is not an SI-sequence";
        return out;
    }

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        ++out.trials;
        const Form L = random_linear_operator(f, rng);
        if (is_weak_lefschetz_element_full(f, L)) {
            out.status = VerdictStatus::Holds;
            out.witness = L;
            return out;
        }
    }

    // certificates: the middle map cannot be an isomorphism
    const unsigned r = d >= 1 ? (d - 1) / 2 : 0;
    const bool middle_flat = d >= 2 && (d % 2 == 1 || h[r] == h[r + 1]);
    if (middle_flat) {
        try {
            if (structural_zero_block(f, r)) {
                out.status = VerdictStatus::Fails;
                out.certificate = "structural zero block at level " + std::to_string(r);
                out.hessian_k = r;
                return out;
            }
        } catch (const NotPerazzoShape&) {
        }
        const HessianSpec spec = higher_hessian(f, r);
        const VanishingVerdict v = vanishing_verdict(spec.entries, {seed});
        if (v.is_zero()) {
            out.status = VerdictStatus::Fails;
            out.certificate = "vanishing Hessian of order " + std::to_string(r);
            out.hessian_k = r;
            out.hessian_verdict = v;
            return out;
        }
    }
    out.status = VerdictStatus::Inconclusive;
    out.certificate = "no witness found and no certificate applies";
    return out;
}

SlpVerdict slp_verdict(const Form& f, uint64_t seed) {
    SlpVerdict out;
    const unsigned d = f.degree();
    std::vector<HessianSpec> specs;
    for (unsigned k = 1; 2 * k <= d; ++k) {
        specs.push_back(higher_hessian(f, k));
        const VanishingVerdict v = vanishing_verdict(specs.back().entries, {seed + k});
        out.verdicts.emplace_back(k, v);
        if (v.is_zero()) {
            out.status = VerdictStatus::Fails;
            out.failing_k = k;
            return out;
        }
    }
    // all levels nonzero: look for one point certifying every level at once
    Rng rng(seed ^ 0x51f5eedULL);
    for (int attempt = 0; attempt < 20; ++attempt) {
        const auto p = rng.point(f.nvars(), 9);
        bool ok = true;
        for (const auto& spec : specs) {
            QMatrix m(static_cast<long>(spec.entries.size()), static_cast<long>(spec.entries.size()));
            for (size_t i = 0; i < spec.entries.size(); ++i)
                for (size_t j = 0; j < spec.entries.size(); ++j)
                    m.at(static_cast<long>(i), static_cast<long>(j)) = spec.entries[i][j].evaluate(p);
            if (rank(m) < m.rows()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.status = VerdictStatus::Holds;
            out.witness_point = p;
            return out;
        }
    }
    out.status = VerdictStatus::Inconclusive;
    return out;
}

LefschetzReport lefschetz_report(const Form& f, int trials, uint64_t seed) {
    LefschetzReport report;
    report.h = hilbert_vector(f);
    report.wlp = wlp_verdict(f, trials, seed);
    report.slp = slp_verdict(f, seed);
    return report;
}

}  // namespace lefschetz
