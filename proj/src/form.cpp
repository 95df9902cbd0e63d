#include "lefschetz/form.hpp"

#include <algorithm>
#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

std::vector<Monomial> monomials_of_degree(size_t nvars, unsigned k) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (k == 0) out.emplace_back(std::vector<unsigned>{});
        return out;
    }
    std::vector<unsigned> cur(nvars, 0);
    // lex-descending: leading variable takes the largest exponent first
    auto rec = [&](auto&& self, size_t pos, unsigned remaining) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (unsigned e = remaining; e + 1 != 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
            if (e == 0) break;
        }
        cur[pos] = 0;
    };
    rec(rec, 0, k);
    return out;
}

void Form::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Form Form::from_terms(std::vector<std::string> vars, const TermMap& terms,
                      std::optional<unsigned> nominal_degree) {
    Form f(std::move(vars), nominal_degree.value_or(0));
    std::optional<unsigned> deg;
    for (const auto& [m, c] : terms) {
        if (c == 0) continue;
        if (m.nvars() != f.nvars()) throw ArityMismatch("monomial arity does not match variable list");
        const unsigned d = m.degree();
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            throw NotHomogeneous("mixed monomial degrees " + std::to_string(*deg) + " and " +
                                 std::to_string(d));
        }
        f.terms_.emplace(m, c);
    }
    if (deg) f.degree_ = *deg;
    return f;
}

Form Form::monomial_form(std::vector<std::string> vars, const Monomial& m, const Rational& c) {
    Form f(std::move(vars), m.degree());
    if (m.nvars() != f.nvars()) throw ArityMismatch("monomial arity does not match variable list");
    if (c != 0) f.terms_.emplace(m, c);
    return f;
}

Form Form::variable(std::vector<std::string> vars, size_t index) {
    Monomial m(vars.size());
    m.e[index] = 1;
    return monomial_form(std::move(vars), m, Rational(1));
}

Form Form::constant(std::vector<std::string> vars, const Rational& c) {
    return monomial_form(std::move(vars), Monomial(vars.size()), c);
}

Rational Form::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Form Form::operator+(const Form& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("cannot add forms over different variable lists");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_)
        throw DegreeMismatch("cannot add forms of degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    Form out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Form Form::operator-(const Form& o) const { return *this + o.scaled(Rational(-1)); }

Form Form::scaled(const Rational& c) const {
    Form out(vars_, degree_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Form Form::operator*(const Form& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("cannot multiply forms over different variable lists");
    Form out(vars_, degree_ + o.degree_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Form Form::pow(unsigned e) const {
    Form out = Form::constant(vars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool Form::operator==(const Form& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_ && (is_zero() || degree_ == o.degree_);
}

Form Form::derivative(size_t var) const {
    Form out(vars_, degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial n = m;
        n.e[var] -= 1;
        out.add_term(n, c * Rational(static_cast<long>(m.e[var])));
    }
    return out;
}

std::vector<Form> Form::partials() const {
    std::vector<Form> out;
    out.reserve(nvars());
    for (size_t i = 0; i < nvars(); ++i) out.push_back(derivative(i));
    return out;
}

Rational Form::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw ArityMismatch("point arity does not match variable list");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) t *= rat_pow(point[i], m.e[i]);
        total += t;
    }
    return total;
}

Form Form::substitute(const std::vector<Form>& images) const {
    if (images.size() != nvars()) throw ArityMismatch("one image per variable required");
    std::vector<std::string> target_vars;
    for (const auto& g : images) {
        if (target_vars.empty())
            target_vars = g.vars();
        else if (g.vars() != target_vars)
            throw VariableMismatch("substitution images over different variable lists");
    }
    if (target_vars.empty()) target_vars = vars_;

    // cached powers per variable
    std::vector<std::vector<Form>> pows(images.size());
    for (size_t i = 0; i < images.size(); ++i) pows[i].push_back(Form::constant(target_vars, Rational(1)));

    Form::TermMap acc;
    for (const auto& [m, c] : terms_) {
        Form t = Form::constant(target_vars, c);
        for (size_t i = 0; i < m.e.size() && !t.is_zero(); ++i) {
            while (pows[i].size() <= m.e[i]) pows[i].push_back(pows[i].back() * images[i]);
            t = t * pows[i][m.e[i]];
        }
        for (const auto& [mm, cc] : t.terms()) {
            auto it = acc.find(mm);
            if (it == acc.end()) {
                acc.emplace(mm, cc);
            } else {
                it->second += cc;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    // from_terms rejects a non-homogeneous outcome
    return Form::from_terms(target_vars, acc);
}

Form Form::embed(std::vector<std::string> new_vars, const std::vector<size_t>& slot_of) const {
    if (slot_of.size() != nvars()) throw ArityMismatch("slot map arity mismatch");
    Form out(std::move(new_vars), degree_);
    for (const auto& [m, c] : terms_) {
        Monomial n(out.nvars());
        for (size_t i = 0; i < m.e.size(); ++i) n.e[slot_of[i]] = m.e[i];
        out.terms_.emplace(n, c);
    }
    return out;
}

std::string Form::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream mono;
        bool any_var = false;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i];
            if (m.e[i] > 1) mono << "^" << m.e[i];
            any_var = true;
        }
        if (!any_var) {
            os << a.get_str();
        } else if (a == 1) {
            os << mono.str();
        } else {
            os << a.get_str() << "*" << mono.str();
        }
    }
    return os.str();
}

Form apply_operator(const Form& q, const Form& f) {
    if (q.vars() != f.vars()) throw VariableMismatch("operator and form use different variable lists");
    const unsigned out_deg = q.degree() <= f.degree() ? f.degree() - q.degree() : 0;
    Form out(f.vars(), out_deg);
    for (const auto& [mq, cq] : q.terms()) {
        for (const auto& [mf, cf] : f.terms()) {
            if (!mq.divides(mf)) continue;
            Rational c = cq * cf;
            for (size_t i = 0; i < mq.e.size(); ++i)
                if (mq.e[i] > 0) c *= Rational(falling_factorial(mf.e[i], mq.e[i]));
            out.add_term(mf / mq, c);
        }
    }
    return out;
}

std::optional<Form> exact_divide(const Form& f, const Form& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    if (f.is_zero()) return Form(f.vars(), 0);
    if (f.vars() != divisor.vars()) throw VariableMismatch("division over different variable lists");
    if (divisor.degree() > f.degree()) return std::nullopt;
    const auto& lt_div = *divisor.terms().begin();
    Form rem = f;
    Form::TermMap q;
    while (!rem.is_zero()) {
        const auto& lt = *rem.terms().begin();
        if (!lt_div.first.divides(lt.first)) return std::nullopt;
        const Monomial qm = lt.first / lt_div.first;
        const Rational qc = lt.second / lt_div.second;
        q.emplace(qm, qc);
        rem = rem - Form::monomial_form(f.vars(), qm, qc) * divisor;
    }
    return Form::from_terms(f.vars(), q, f.degree() - divisor.degree());
}

Form substitute_with_denominator(const Form& f, const std::vector<Form>& numerators, const Form& den) {
    if (f.is_zero()) return Form(den.vars(), 0);
    const Form numerator_image = f.substitute(numerators);
    const Form den_power = den.pow(f.degree());
    auto q = exact_divide(numerator_image, den_power);
    if (!q) throw NonPolynomialResult("denominators do not cancel in substitution");
    return *q;
}

Monomial monomial_content(const Form& f) {
    Monomial g(f.nvars());
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        if (first) {
            g = m;
            first = false;
            continue;
        }
        for (size_t i = 0; i < g.e.size(); ++i) g.e[i] = std::min(g.e[i], m.e[i]);
    }
    return g;
}

bool supported_on_pair(const Form& f, size_t ui, size_t vi) {
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0 && i != ui && i != vi) return false;
    }
    return true;
}

namespace {

// dense univariate poly, index = power; trailing zeros trimmed
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational q = a.back() / b.back();
        const size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

Form binary_gcd(const Form& a, const Form& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.vars() != b.vars()) throw VariableMismatch("gcd over different variable lists");
    // locate the (at most two) active variables
    std::vector<size_t> active;
    for (const Form* f : {&a, &b})
        for (const auto& [m, c] : f->terms()) {
            (void)c;
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] > 0 && std::find(active.begin(), active.end(), i) == active.end())
                    active.push_back(i);
        }
    if (active.size() > 2) throw InvalidInput("binary_gcd needs forms supported on two variables");
    std::sort(active.begin(), active.end());
    const size_t ui = active.empty() ? 0 : active[0];
    const size_t vi = active.size() > 1 ? active[1] : ui;

    auto split = [&](const Form& f, Monomial& content, UniPoly& uni) {
        content = monomial_content(f);
        uni.assign(f.degree() - content.degree() + 1, Rational(0));
        for (const auto& [m, c] : f.terms()) {
            const Monomial rest = m / content;
            uni[rest.e[ui]] = c;
        }
        uni_trim(uni);
    };
    Monomial ca, cb;
    UniPoly pa, pb;
    split(a, ca, pa);
    split(b, cb, pb);
    const UniPoly g = uni_gcd(pa, pb);

    Monomial cm(a.nvars());
    for (size_t i = 0; i < cm.e.size(); ++i) cm.e[i] = std::min(ca.e[i], cb.e[i]);
    const unsigned gdeg = g.empty() ? 0 : static_cast<unsigned>(g.size() - 1);
    Form::TermMap terms;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        Monomial m = cm;
        m.e[ui] += static_cast<unsigned>(i);
        if (vi != ui) m.e[vi] += gdeg - static_cast<unsigned>(i);
        terms.emplace(m, g[i]);
    }
    return Form::from_terms(a.vars(), terms);
}

}  // namespace lefschetz
