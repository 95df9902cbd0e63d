#include "lefschetz/gordan_noether.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lefschetz/errors.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

namespace {

std::vector<std::string> relation_var_names(size_t n, const std::vector<std::string>& avoid) {
    std::set<std::string> taken(avoid.begin(), avoid.end());
    std::vector<std::string> names;
    const std::string base = taken.count("y0") == 0 ? "y" : "r";
    for (size_t i = 0; i < n; ++i) names.push_back(base + std::to_string(i));
    return names;
}

unsigned common_degree(const std::vector<Form>& forms) {
    unsigned deg = 0;
    bool seen = false;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        if (!seen) {
            deg = f.degree();
            seen = true;
        } else if (f.degree() != deg) {
            throw DegreeMismatch("system components of unequal degrees");
        }
    }
    return deg;
}

}  // namespace

std::optional<AlgebraicRelation> find_min_relation(const Form& f, unsigned max_degree) {
    if (max_degree < 1) throw InvalidInput("max_degree must be at least 1");
    if (f.degree() < 1) throw DegreeTooSmall("relations among partials need degree >= 1");
    const std::vector<Form> parts = f.partials();
    const size_t n = parts.size();
    const std::vector<std::string> yvars = relation_var_names(n, f.vars());
    const unsigned pdeg = f.degree() - 1;

    for (unsigned e = 1; e <= max_degree; ++e) {
        const auto ymonos = monomials_of_degree(n, e);
        const auto target = monomials_of_degree(f.nvars(), e * pdeg);
        std::map<Monomial, long, LexDescending> idx;
        for (size_t i = 0; i < target.size(); ++i) idx.emplace(target[i], static_cast<long>(i));

        QMatrix m(static_cast<long>(target.size()), static_cast<long>(ymonos.size()));
        for (size_t j = 0; j < ymonos.size(); ++j) {
            Form prod = Form::constant(f.vars(), Rational(1));
            for (size_t i = 0; i < n && !prod.is_zero(); ++i)
                for (unsigned rep = 0; rep < ymonos[j].e[i]; ++rep) prod = prod * parts[i];
            for (const auto& [mm, cc] : prod.terms()) m.at(idx.at(mm), static_cast<long>(j)) = cc;
        }
        const auto kernel = kernel_basis(m);
        if (kernel.empty()) continue;
        Form::TermMap terms;
        for (size_t j = 0; j < ymonos.size(); ++j)
            if (kernel[0][j] != 0) terms.emplace(ymonos[j], kernel[0][j]);
        return AlgebraicRelation{Form::from_terms(yvars, terms, e), e};
    }
    return std::nullopt;
}

namespace {

// gcd of the nonzero components: the full gcd when everything lives on at
// most two variables, the common monomial factor otherwise
Form system_gcd(const std::vector<Form>& comps) {
    std::vector<const Form*> nz;
    for (const auto& c : comps)
        if (!c.is_zero()) nz.push_back(&c);
    if (nz.empty()) return Form();
    std::set<size_t> active;
    for (const Form* c : nz)
        for (const auto& [m, coeff] : c->terms()) {
            (void)coeff;
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] > 0) active.insert(i);
        }
    if (active.size() <= 2) {
        Form g = *nz[0];
        for (size_t i = 1; i < nz.size(); ++i) g = binary_gcd(g, *nz[i]);
        return g;
    }
    Monomial common = monomial_content(*nz[0]);
    for (size_t i = 1; i < nz.size(); ++i) {
        const Monomial mi = monomial_content(*nz[i]);
        for (size_t v = 0; v < common.e.size(); ++v) common.e[v] = std::min(common.e[v], mi.e[v]);
    }
    return Form::monomial_form(nz[0]->vars(), common, Rational(1));
}

}  // namespace

bool is_self_vanishing(const std::vector<Form>& h) {
    common_degree(h);  // throws on mismatch
    for (size_t i = 0; i < h.size(); ++i) {
        Form acc(h[i].vars(), 0);
        for (size_t j = 0; j < h.size(); ++j) {
            if (h[j].is_zero()) continue;
            const Form term = h[j] * h[i].derivative(j);
            acc = acc.is_zero() ? term : (term.is_zero() ? acc : acc + term);
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool is_self_vanishing(const std::vector<GaussForm>& h) {
    for (size_t i = 0; i < h.size(); ++i) {
        Form acc_re(h[i].re.vars(), 0), acc_im(h[i].re.vars(), 0);
        for (size_t j = 0; j < h.size(); ++j) {
            const Form dre = h[i].re.derivative(j);
            const Form dim = h[i].im.derivative(j);
            // (a+bi)(c+di) = ac - bd + i(ad + bc)
            const Form re_part = h[j].re * dre - h[j].im * dim;
            const Form im_part = h[j].re * dim + h[j].im * dre;
            if (!re_part.is_zero()) acc_re = acc_re.is_zero() ? re_part : acc_re + re_part;
            if (!im_part.is_zero()) acc_im = acc_im.is_zero() ? im_part : acc_im + im_part;
        }
        if (!acc_re.is_zero() || !acc_im.is_zero()) return false;
    }
    return true;
}

SelfVanishingSystem build_svs(const Form& f, const AlgebraicRelation& rel) {
    const std::vector<Form> parts = f.partials();
    if (rel.g.nvars() != parts.size()) throw RelationInvalid("relation arity does not match the form");
    if (!rel.g.substitute(parts).is_zero())
        throw RelationInvalid("candidate relation does not vanish on the partials");

    std::vector<Form> h;
    for (size_t j = 0; j < parts.size(); ++j) h.push_back(rel.g.derivative(j).substitute(parts));

    bool trivial = true;
    for (const auto& c : h)
        if (!c.is_zero()) trivial = false;
    if (trivial) throw RelationInvalid("relation yields the trivial system");

    const Form g = system_gcd(h);
    if (!g.is_zero() && g.degree() > 0) {
        for (auto& c : h) {
            if (c.is_zero()) continue;
            auto q = exact_divide(c, g);
            if (!q) throw RelationInvalid("gcd reduction failed");
            c = *q;
        }
    }
    // zero components must carry the common degree for later bookkeeping
    const unsigned hdeg = common_degree(h);
    for (auto& c : h)
        if (c.is_zero()) c = Form(f.vars(), hdeg);

    SelfVanishingSystem svs{h, rel.g};

    // conclusions that must hold for a system built from a minimal relation
    auto derivation = [&](const Form& target) {
        Form acc(f.vars(), 0);
        for (size_t j = 0; j < h.size(); ++j) {
            if (h[j].is_zero()) continue;
            const Form term = h[j] * target.derivative(j);
            if (!term.is_zero()) acc = acc.is_zero() ? term : acc + term;
        }
        return acc;
    };
    if (!derivation(f).is_zero()) throw RelationInvalid("system is not a syzygy of the partials");
    for (const auto& p : parts)
        if (!derivation(p).is_zero()) throw RelationInvalid("a partial escapes the solution space");
    for (size_t j = 0; j < h.size(); ++j) {
        Form acc(f.vars(), 0);
        for (size_t i = 0; i < h.size(); ++i) {
            if (h[i].is_zero()) continue;
            const Form term = h[i].derivative(j) * parts[i];
            if (!term.is_zero()) acc = acc.is_zero() ? term : acc + term;
        }
        if (!acc.is_zero()) throw RelationInvalid("derivative system is not a syzygy");
    }
    if (!is_self_vanishing(h)) throw RelationInvalid("system is not self-vanishing");
    return svs;
}

bool verify_gn_identity(const Form& f, const SelfVanishingSystem& svs) {
    const size_t n = f.nvars();
    if (svs.h.size() != n) throw ArityMismatch("system arity does not match the form");

    // doubled variable list (x..., y...); y_i tracks the direction slot
    std::vector<std::string> doubled = f.vars();
    for (const auto& v : f.vars()) doubled.push_back(v + "_dir");
    std::vector<size_t> slots(n);
    for (size_t i = 0; i < n; ++i) slots[i] = i;

    Form current = f.embed(doubled, slots);
    std::vector<Form> images;
    for (size_t i = 0; i < n; ++i) images.push_back(Form::variable(f.vars(), i));
    unsigned hdeg = 0;
    for (const auto& c : svs.h)
        if (!c.is_zero()) hdeg = c.degree();
    for (const auto& c : svs.h)
        images.push_back(c.is_zero() ? Form(f.vars(), hdeg) : c);

    for (unsigned j = 1; j <= f.degree(); ++j) {
        // current = f^{(j-1)} * (j-1)! ; apply the direction derivation
        Form next(doubled, 0);
        for (size_t i = 0; i < n; ++i) {
            const Form di = current.derivative(i);
            if (di.is_zero()) continue;
            const Form term = Form::variable(doubled, n + i) * di;
            next = next.is_zero() ? term : next + term;
        }
        current = next.scaled(Rational(1, static_cast<long>(j)));
        if (current.is_zero()) break;
        if (!current.substitute(images).is_zero()) return false;
    }

    // independent spot check at random exact points
    Rng rng(7);
    for (int s = 0; s < 3; ++s) {
        const auto p = rng.point(n, 7);
        Rational tau(rng.nonzero_in(-9, 9), rng.int_in(1, 4));
        tau.canonicalize();
        std::vector<Rational> moved(n);
        for (size_t i = 0; i < n; ++i)
            moved[i] = p[i] + tau * (svs.h[i].is_zero() ? Rational(0) : svs.h[i].evaluate(p));
        if (f.evaluate(moved) != f.evaluate(p)) return false;
    }
    return true;
}

CremonaReduction cremona_reduce(const Form& f, const SelfVanishingSystem& svs, size_t pivot) {
    const size_t n = f.nvars();
    if (svs.h.size() != n) throw ArityMismatch("system arity does not match the form");
    if (pivot >= n || svs.h[pivot].is_zero()) throw PivotZero("pivot component is zero");
    const Form& hp = svs.h[pivot];
    const unsigned e = hp.degree();

    std::vector<Form> zero_images;
    for (size_t i = 0; i < n; ++i)
        zero_images.push_back(i == pivot ? Form(f.vars(), 1) : Form::variable(f.vars(), i));
    const Form reduced = f.substitute(zero_images);

    // pull the reduced form back along s_i = x_i - (h_i/h_p) x_p and demand f
    std::vector<Form> nums;
    const Form xp = Form::variable(f.vars(), pivot);
    for (size_t i = 0; i < n; ++i) {
        if (i == pivot) {
            nums.push_back(Form(f.vars(), e + 1));
            continue;
        }
        const Form xi_hp = Form::variable(f.vars(), i) * hp;
        const Form hi_xp = svs.h[i].is_zero() ? Form(f.vars(), e + 1) : svs.h[i] * xp;
        nums.push_back(hi_xp.is_zero() ? xi_hp : xi_hp - hi_xp);
    }
    const Form pulled_back = substitute_with_denominator(reduced, nums, hp);
    if (pulled_back != f)
        throw NonPolynomialResult("reduced form does not pull back to the input");

    CremonaReduction out;
    out.reduced = reduced;
    out.pivot = pivot;
    out.forward.numerators = nums;
    // the pivot coordinate itself is unchanged
    out.forward.numerators[pivot] = xp * hp;
    out.forward.denominator = hp;
    // inverse: x_i = s_i + (h_i(s)/h_p(s)) s_p
    out.backward.denominator = hp;
    for (size_t i = 0; i < n; ++i) {
        if (i == pivot) {
            out.backward.numerators.push_back(xp * hp);
            continue;
        }
        const Form si_hp = Form::variable(f.vars(), i) * hp;
        const Form hi_sp = svs.h[i].is_zero() ? Form(f.vars(), e + 1) : svs.h[i] * xp;
        out.backward.numerators.push_back(hi_sp.is_zero() ? si_hp : si_hp + hi_sp);
    }
    return out;
}

}  // namespace lefschetz
