#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// All core computations run over arbitrary-precision rationals. mpq_class
// keeps values canonical (lowest terms, positive denominator) under
// arithmetic; string construction needs an explicit canonicalize, which
// parse_rational takes care of.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string rat_str(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
// n * (n-1) * ... * (n-k+1)
Integer falling_factorial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

Rational rat_pow(const Rational& q, unsigned long e);

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

// Scales a rational vector to integer entries with content 1. The entry at
// sign_index (or the first nonzero entry when sign_index is out of range or
// zero there) is made positive. No-op on the zero vector.
void normalize_integral(std::vector<Rational>& v, long sign_index = -1);

// Gaussian rationals a + b*i, used by the Waring decomposition layer.
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
    Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian operator/(const Gaussian& o) const;
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

Gaussian gauss_pow(const Gaussian& g, unsigned long e);
std::string gauss_str(const Gaussian& g);

}  // namespace lefschetz
