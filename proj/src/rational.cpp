#include "lefschetz/rational.hpp"

#include <sstream>

#include "lefschetz/errors.hpp"

namespace lefschetz {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer falling_factorial(unsigned long n, unsigned long k) {
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= Integer(n - i);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r = 1;
    Rational base = q;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer num = q.get_num();
    const Integer den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer ns, ds;
    mpz_sqrt(ns.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(ds.get_mpz_t(), den.get_mpz_t());
    return Rational(ns, ds);
}

void normalize_integral(std::vector<Rational>& v, long sign_index) {
    Integer lcm = 1;
    bool any = false;
    for (const auto& q : v) {
        if (q == 0) continue;
        any = true;
        Integer l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        lcm = l;
    }
    if (!any) return;
    Integer content = 0;
    std::vector<Integer> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * Rational(lcm);
        ints[i] = scaled.get_num();
        Integer g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
        content = g;
    }
    long pivot = sign_index;
    if (pivot < 0 || pivot >= static_cast<long>(v.size()) || ints[pivot] == 0) {
        pivot = -1;
        for (size_t i = 0; i < ints.size(); ++i)
            if (ints[i] != 0) {
                pivot = static_cast<long>(i);
                break;
            }
    }
    if (pivot >= 0 && ints[pivot] < 0) content = -content;
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / content);
}

Gaussian Gaussian::operator/(const Gaussian& o) const {
    if (o.is_zero()) throw Error("division by zero Gaussian rational");
    const Rational n = o.norm();
    Gaussian num = *this * o.conj();
    return {num.re / n, num.im / n};
}

Gaussian gauss_pow(const Gaussian& g, unsigned long e) {
    Gaussian r(Rational(1));
    Gaussian base = g;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

std::string gauss_str(const Gaussian& g) {
    std::ostringstream os;
    if (g.im == 0) {
        os << g.re.get_str();
    } else if (g.re == 0) {
        os << g.im.get_str() << "*i";
    } else {
        os << g.re.get_str() << (g.im > 0 ? "+" : "") << g.im.get_str() << "*i";
    }
    return os.str();
}

}  // namespace lefschetz
