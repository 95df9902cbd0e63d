#include "lefschetz/binary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lefschetz/errors.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

BinaryForm::BinaryForm(unsigned degree, std::vector<Rational> coords) : t(degree), h(std::move(coords)) {
    if (h.size() != static_cast<size_t>(t) + 1)
        throw LengthMismatch("binary form of degree t needs t+1 coordinates");
}

BinaryForm BinaryForm::zero(unsigned degree) {
    return BinaryForm(degree, std::vector<Rational>(degree + 1, Rational(0)));
}

BinaryForm BinaryForm::from_plain(const std::vector<Rational>& plain) {
    if (plain.empty()) throw LengthMismatch("empty coefficient vector");
    const unsigned t = static_cast<unsigned>(plain.size() - 1);
    std::vector<Rational> h(plain.size());
    for (size_t i = 0; i < plain.size(); ++i) h[i] = plain[i] / Rational(binomial(t, static_cast<unsigned long>(i)));
    return BinaryForm(t, h);
}

bool BinaryForm::is_zero() const {
    for (const auto& c : h)
        if (c != 0) return false;
    return true;
}

std::vector<Rational> BinaryForm::plain_coeffs() const {
    std::vector<Rational> plain(h.size());
    for (size_t i = 0; i < h.size(); ++i) plain[i] = h[i] * Rational(binomial(t, static_cast<unsigned long>(i)));
    return plain;
}

Form BinaryForm::to_form(const std::vector<std::string>& uv_names) const {
    if (uv_names.size() != 2) throw ArityMismatch("two variable names expected");
    Form::TermMap terms;
    const auto plain = plain_coeffs();
    for (size_t i = 0; i < plain.size(); ++i) {
        if (plain[i] == 0) continue;
        Monomial m(2);
        m.e[0] = t - static_cast<unsigned>(i);
        m.e[1] = static_cast<unsigned>(i);
        terms.emplace(m, plain[i]);
    }
    return Form::from_terms(uv_names, terms, t);
}

BinaryForm BinaryForm::from_form(const Form& f, size_t ui, size_t vi) {
    if (!supported_on_pair(f, ui, vi)) throw VariableMismatch("form not supported on the given pair");
    const unsigned t = f.degree();
    std::vector<Rational> plain(static_cast<size_t>(t) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) plain[m.e[vi]] = c;
    return from_plain(plain);
}

std::string BinaryForm::str(const std::string& u, const std::string& v) const {
    return to_form({u, v}).str();
}

QMatrix cat_matrix(const BinaryForm& h, unsigned k) {
    if (k > h.t) throw DegreeOutOfRange("catalecticant degree out of range");
    QMatrix m(static_cast<long>(h.t - k) + 1, static_cast<long>(k) + 1);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) m.at(i, j) = h.h[static_cast<size_t>(i + j)];
    return m;
}

long border_rank(const BinaryForm& h) {
    if (h.is_zero()) throw ZeroFormError("border rank of the zero form");
    return rank(cat_matrix(h, h.t / 2));
}

std::string secant_position_name(SecantPosition p) {
    switch (p) {
        case SecantPosition::PurePower: return "PurePower";
        case SecantPosition::RankTwo: return "RankTwo";
        case SecantPosition::Tangent: return "Tangent";
        case SecantPosition::RankThree: return "RankThree";
        case SecantPosition::JoinTangent: return "JoinTangent";
        case SecantPosition::Beyond: return "Beyond";
    }
    return "?";
}

std::string exactness_name(Exactness e) {
    switch (e) {
        case Exactness::ExactQ: return "ExactQ";
        case Exactness::ExactQi: return "ExactQi";
        case Exactness::NumericApprox: return "NumericApprox";
    }
    return "?";
}

namespace {

// --- univariate helpers over Q (dense, ascending powers, trailing zeros trimmed)

using UniPoly = std::vector<Rational>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly derivative(const UniPoly& p) {
    UniPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

UniPoly rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational q = a.back() / b.back();
        const size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
    }
    return a;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool square_free(const UniPoly& p) {
    if (p.size() <= 1) return true;
    return poly_gcd(p, derivative(p)).size() <= 1;
}

// divide out a known root exactly (synthetic division)
UniPoly deflate(const UniPoly& p, const Rational& root) {
    UniPoly q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * root;
        q[i - 1] = carry;
        carry = q[i - 1];
    }
    return q;
}

Rational eval(const UniPoly& p, const Rational& x) {
    Rational v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

std::vector<Integer> small_divisors(const Integer& n, size_t cap = 4096) {
    std::vector<Integer> out;
    Integer a = abs(n);
    if (a == 0) return out;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
            if (out.size() > cap) return {};
        }
        if (d > 2000000) return {};  // give up, numeric path takes over
    }
    return out;
}

std::vector<Rational> rational_roots(UniPoly& p) {
    std::vector<Rational> roots;
    trim(p);
    while (p.size() > 1 && p[0] == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    if (p.size() <= 1) return roots;
    // integer scale
    Integer lcm = 1;
    for (const auto& c : p) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        lcm = l;
    }
    std::vector<Integer> z(p.size());
    for (size_t i = 0; i < p.size(); ++i) z[i] = Rational(p[i] * Rational(lcm)).get_num();
    const auto ps = small_divisors(z.front());
    const auto qs = small_divisors(z.back());
    if (ps.empty() || qs.empty()) return roots;
    bool progress = true;
    while (progress && p.size() > 1) {
        progress = false;
        for (const auto& pp : ps) {
            for (const auto& qq : qs) {
                for (int sign : {1, -1}) {
                    Rational cand(sign > 0 ? pp : -pp, qq);
                    cand.canonicalize();
                    if (eval(p, cand) == 0) {
                        roots.push_back(cand);
                        p = deflate(p, cand);
                        trim(p);
                        progress = true;
                    }
                    if (p.size() <= 1) return roots;
                }
            }
        }
    }
    return roots;
}

// Aberth-Ehrlich simultaneous root refinement.
std::vector<std::complex<double>> aberth_roots(const UniPoly& p) {
    const size_t n = p.size() - 1;
    std::vector<std::complex<double>> c(p.size());
    for (size_t i = 0; i < p.size(); ++i) c[i] = p[i].get_d();
    auto horner = [&](std::complex<double> z, std::complex<double>* dout) {
        std::complex<double> v = 0, d = 0;
        for (size_t i = p.size(); i-- > 0;) {
            d = d * z + v;
            v = v * z + c[i];
        }
        if (dout) *dout = d;
        return v;
    };
    double radius = 0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i] / c[n]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(n);
    for (size_t i = 0; i < n; ++i) {
        const double ang = 2.0 * M_PI * (static_cast<double>(i) + 0.35) / static_cast<double>(n);
        z[i] = std::polar(radius * 0.7, ang);
    }
    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> d;
            const std::complex<double> v = horner(z[i], &d);
            if (std::abs(v) < 1e-300) continue;
            std::complex<double> ratio = v / d;
            std::complex<double> sum = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const std::complex<double> delta = ratio / (1.0 - ratio * sum);
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

// operator linear factor a*U + b*V
struct OpLinear {
    Gaussian a, b;
};

struct FactorSplit {
    bool distinct = false;
    bool exact = false;        // all factors over Q(i)
    bool all_rational = true;  // all factors over Q
    std::vector<OpLinear> factors;
    std::vector<std::complex<double>> numeric_roots;  // finite roots of P
    unsigned v_mult = 0;
};

// g = sum_j delta_j U^{k-j} V^j.
FactorSplit factor_kernel_element(const std::vector<Rational>& delta) {
    FactorSplit out;
    const size_t k = delta.size() - 1;
    size_t first = delta.size(), last = 0;
    for (size_t j = 0; j < delta.size(); ++j)
        if (delta[j] != 0) {
            first = std::min(first, j);
            last = j;
        }
    if (first == delta.size()) return out;  // zero element, unusable
    out.v_mult = static_cast<unsigned>(first);
    if (out.v_mult >= 2) return out;

    // dehomogenized P(x), x <-> U; ascending powers, P[m] = delta_{k-m}
    UniPoly p;
    for (size_t m = 0; m <= k - first; ++m) p.push_back(delta[k - m]);
    trim(p);
    if (!square_free(p)) return out;
    out.distinct = true;

    UniPoly work = p;
    std::vector<Rational> rroots = rational_roots(work);
    for (const auto& r : rroots) out.factors.push_back({Gaussian(Rational(1)), Gaussian(-r)});
    if (out.v_mult == 1) out.factors.push_back({Gaussian(Rational(0)), Gaussian(Rational(1))});

    if (work.size() <= 1) {
        out.exact = true;
    } else if (work.size() == 3) {
        const Rational a = work[2], b = work[1], c0 = work[0];
        const Rational disc = b * b - 4 * a * c0;
        std::optional<Rational> s;
        bool imaginary = false;
        if (disc >= 0) {
            s = exact_sqrt(disc);
        } else {
            s = exact_sqrt(-disc);
            imaginary = true;
        }
        if (s) {
            out.exact = true;
            out.all_rational = out.all_rational && !imaginary;
            const Rational two_a = 2 * a;
            if (imaginary) {
                // roots (-b +- i s) / 2a; factors U - root*V
                out.factors.push_back({Gaussian(Rational(1)), Gaussian(b / two_a, -(*s) / two_a)});
                out.factors.push_back({Gaussian(Rational(1)), Gaussian(b / two_a, (*s) / two_a)});
            } else {
                out.factors.push_back({Gaussian(Rational(1)), Gaussian(-(-b + *s) / two_a)});
                out.factors.push_back({Gaussian(Rational(1)), Gaussian(-(-b - *s) / two_a)});
            }
        }
    }
    if (!out.exact) {
        out.all_rational = false;
        out.numeric_roots = aberth_roots(p);
        // numeric distinctness guard
        for (size_t i = 0; i < out.numeric_roots.size(); ++i)
            for (size_t j = i + 1; j < out.numeric_roots.size(); ++j)
                if (std::abs(out.numeric_roots[i] - out.numeric_roots[j]) < 1e-8) out.distinct = false;
    }
    return out;
}

GaussLinear normalize_linear(Gaussian a, Gaussian b) {
    const Gaussian lead = a.is_zero() ? b : a;
    return GaussLinear{a / lead, b / lead};
}

std::vector<Gaussian> power_coords(const GaussLinear& ell, unsigned t) {
    std::vector<Gaussian> v(static_cast<size_t>(t) + 1);
    for (unsigned i = 0; i <= t; ++i) v[i] = gauss_pow(ell.a, t - i) * gauss_pow(ell.b, i);
    return v;
}

}  // namespace

std::vector<Gaussian> expand_waring(const std::vector<WaringTerm>& terms, unsigned t) {
    std::vector<Gaussian> total(static_cast<size_t>(t) + 1, Gaussian());
    for (const auto& term : terms) {
        const auto v = power_coords(term.ell, t);
        for (size_t i = 0; i < v.size(); ++i) total[i] = total[i] + term.coeff * v[i];
    }
    return total;
}

SecantPosition classify_secant_position(const BinaryForm& h) {
    const long br = border_rank(h);
    if (br == 1) return SecantPosition::PurePower;
    if (br >= 4) return SecantPosition::Beyond;
    const unsigned k = static_cast<unsigned>(br);
    if (h.t < 2 * k - 1)
        throw DegreeTooSmall("rank-" + std::to_string(br) + " position undefined in degree " +
                             std::to_string(h.t));
    const auto kernel = kernel_basis(cat_matrix(h, k));
    if (kernel.size() != 1)
        throw DegreeTooSmall("apolar kernel in degree " + std::to_string(k) + " is not a line");
    const FactorSplit split = factor_kernel_element(kernel[0]);
    if (br == 2) return split.distinct ? SecantPosition::RankTwo : SecantPosition::Tangent;
    return split.distinct ? SecantPosition::RankThree : SecantPosition::JoinTangent;
}

BinaryForm apolar_dual(const BinaryForm& linear) {
    if (linear.t != 1) throw DegreeOutOfRange("apolar dual is defined on linear forms");
    if (linear.is_zero()) throw ZeroFormError("apolar dual of zero");
    return BinaryForm(1, {linear.h[1], -linear.h[0]});
}

std::string GaussLinear::str(const std::string& u, const std::string& v) const {
    std::ostringstream os;
    os << "(" << gauss_str(a) << ")*" << u << " + (" << gauss_str(b) << ")*" << v;
    return os.str();
}

std::string WaringDecomposition::str() const {
    std::ostringstream os;
    os << exactness_name(exactness) << ", " << size() << " terms:";
    if (exactness == Exactness::NumericApprox) {
        for (const auto& term : numeric_terms) {
            os << "\n  (" << term.coeff.real() << (term.coeff.imag() < 0 ? "" : "+") << term.coeff.imag()
               << "i) * [(" << term.ell[0].real() << (term.ell[0].imag() < 0 ? "" : "+")
               << term.ell[0].imag() << "i)*u + (" << term.ell[1].real()
               << (term.ell[1].imag() < 0 ? "" : "+") << term.ell[1].imag() << "i)*v]^" << degree;
        }
    } else {
        for (const auto& term : terms)
            os << "\n  (" << gauss_str(term.coeff) << ") * [" << term.ell.str() << "]^" << degree;
    }
    return os.str();
}

WaringDecomposition sylvester_decompose(const BinaryForm& h) {
    if (h.is_zero()) throw ZeroFormError("decomposition of the zero form");
    const unsigned t = h.t;
    if (t == 0) {
        WaringDecomposition out;
        out.degree = 0;
        out.terms.push_back({Gaussian(h.h[0]), GaussLinear{Gaussian(Rational(1)), Gaussian()}});
        return out;
    }
    const long br = border_rank(h);

    for (unsigned k = static_cast<unsigned>(br); k <= t; ++k) {
        const auto kernel = kernel_basis(cat_matrix(h, k));
        if (kernel.empty()) continue;

        // deterministic candidate scan: basis vectors, pairwise sums and
        // differences, then seeded small combinations
        std::vector<std::vector<Rational>> candidates = kernel;
        for (size_t i = 0; i < kernel.size(); ++i)
            for (size_t j = i + 1; j < kernel.size(); ++j) {
                std::vector<Rational> plus(kernel[i]), minus(kernel[i]);
                for (size_t m = 0; m < plus.size(); ++m) {
                    plus[m] += kernel[j][m];
                    minus[m] -= kernel[j][m];
                }
                candidates.push_back(std::move(plus));
                candidates.push_back(std::move(minus));
            }
        Rng rng(0xb1a5ed5eedULL + k);
        for (int draw = 0; draw < 120; ++draw) {
            std::vector<Rational> combo(kernel[0].size(), Rational(0));
            for (const auto& basis_vec : kernel) {
                const long c = rng.int_in(-3, 3);
                if (c == 0) continue;
                for (size_t m = 0; m < combo.size(); ++m) combo[m] += Rational(c) * basis_vec[m];
            }
            candidates.push_back(std::move(combo));
        }

        const FactorSplit* best = nullptr;
        std::vector<FactorSplit> splits;
        splits.reserve(candidates.size());
        int best_quality = 3;
        for (const auto& cand : candidates) {
            FactorSplit s = factor_kernel_element(cand);
            if (!s.distinct) continue;
            const int quality = s.exact ? (s.all_rational ? 0 : 1) : 2;
            splits.push_back(std::move(s));
            if (quality < best_quality) {
                best_quality = quality;
                best = &splits.back();
                if (best_quality == 0) break;
            }
        }
        if (!best) continue;

        WaringDecomposition out;
        out.degree = t;
        out.kernel_degree = k;

        if (best->exact) {
            std::vector<GaussLinear> ells;
            for (const auto& fac : best->factors)
                ells.push_back(normalize_linear(fac.b, -fac.a));  // apolar dual of a*U+b*V
            // solve sum lambda_j ell_j^t = h
            std::vector<std::vector<Gaussian>> a(static_cast<size_t>(t) + 1,
                                                 std::vector<Gaussian>(ells.size()));
            std::vector<Gaussian> rhs(static_cast<size_t>(t) + 1);
            for (size_t j = 0; j < ells.size(); ++j) {
                const auto col = power_coords(ells[j], t);
                for (size_t i = 0; i < col.size(); ++i) a[i][j] = col[i];
            }
            for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = Gaussian(h.h[i]);
            const auto lambda = generic_solve(a, rhs);
            if (!lambda) continue;
            bool all_real = true;
            for (size_t j = 0; j < ells.size(); ++j) {
                if ((*lambda)[j].is_zero()) continue;
                out.terms.push_back({(*lambda)[j], ells[j]});
                if ((*lambda)[j].im != 0 || ells[j].a.im != 0 || ells[j].b.im != 0) all_real = false;
            }
            // exactness gate: the expansion must reproduce the input
            const auto back = expand_waring(out.terms, t);
            bool match = true;
            for (size_t i = 0; i < back.size(); ++i)
                if (!(back[i] == Gaussian(h.h[i]))) match = false;
            if (!match) continue;
            out.exactness = all_real ? Exactness::ExactQ : Exactness::ExactQi;
            return out;
        }

        // numeric fallback
        std::vector<std::array<std::complex<double>, 2>> ells;
        for (const auto& r : best->numeric_roots) {
            // operator factor U - r V, dual (-r, -1), normalized
            std::complex<double> a0 = -r, b0 = -1.0;
            const std::complex<double> lead = std::abs(a0) > 1e-12 ? a0 : b0;
            ells.push_back({a0 / lead, b0 / lead});
        }
        if (best->v_mult == 1) ells.push_back({1.0, 0.0});  // dual of V
        const size_t e = ells.size();
        auto cpow = [](std::complex<double> z, unsigned n) {
            std::complex<double> r = 1.0;
            for (unsigned i = 0; i < n; ++i) r *= z;
            return r;
        };
        std::vector<std::vector<std::complex<double>>> a(static_cast<size_t>(t) + 1,
                                                         std::vector<std::complex<double>>(e));
        for (size_t j = 0; j < e; ++j)
            for (unsigned i = 0; i <= t; ++i) a[i][j] = cpow(ells[j][0], t - i) * cpow(ells[j][1], i);
        // normal equations
        std::vector<std::vector<std::complex<double>>> ata(e, std::vector<std::complex<double>>(e + 1));
        for (size_t r = 0; r < e; ++r) {
            for (size_t c = 0; c < e; ++c) {
                std::complex<double> s = 0;
                for (unsigned i = 0; i <= t; ++i) s += std::conj(a[i][r]) * a[i][c];
                ata[r][c] = s;
            }
            std::complex<double> s = 0;
            for (unsigned i = 0; i <= t; ++i) s += std::conj(a[i][r]) * h.h[i].get_d();
            ata[r][e] = s;
        }
        for (size_t col = 0; col < e; ++col) {
            size_t piv = col;
            for (size_t r = col + 1; r < e; ++r)
                if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
            std::swap(ata[col], ata[piv]);
            if (std::abs(ata[col][col]) < 1e-13) continue;
            for (size_t r = 0; r < e; ++r) {
                if (r == col) continue;
                const std::complex<double> f = ata[r][col] / ata[col][col];
                for (size_t c = col; c <= e; ++c) ata[r][c] -= f * ata[col][c];
            }
        }
        WaringDecomposition num;
        num.degree = t;
        num.kernel_degree = k;
        num.exactness = Exactness::NumericApprox;
        for (size_t j = 0; j < e; ++j) {
            const std::complex<double> lam =
                std::abs(ata[j][j]) < 1e-13 ? 0.0 : ata[j][e] / ata[j][j];
            if (std::abs(lam) < 1e-10) continue;
            num.numeric_terms.push_back({lam, ells[j]});
        }
        return num;
    }
    throw Error("no usable apolar kernel element found");
}

}  // namespace lefschetz
