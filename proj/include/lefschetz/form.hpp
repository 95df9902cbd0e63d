#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/monomial.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

// Sparse homogeneous polynomial over the rationals with a declared, ordered
// variable list. The same type doubles as a differential-operator polynomial:
// the i-th operator variable acts as d/dx_i on a form sharing the variable
// layout (pairing is positional).
class Form {
  public:
    using TermMap = std::map<Monomial, Rational, LexDescending>;

    Form() : degree_(0) {}
    // zero form of the given nominal degree
    Form(std::vector<std::string> vars, unsigned degree)
        : vars_(std::move(vars)), degree_(degree) {}

    static Form from_terms(std::vector<std::string> vars, const TermMap& terms,
                           std::optional<unsigned> nominal_degree = std::nullopt);
    static Form monomial_form(std::vector<std::string> vars, const Monomial& m, const Rational& c);
    static Form variable(std::vector<std::string> vars, size_t index);
    static Form constant(std::vector<std::string> vars, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const { return scaled(Rational(-1)); }
    Form operator*(const Form& o) const;
    Form scaled(const Rational& c) const;
    Form pow(unsigned e) const;
    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form derivative(size_t var) const;
    std::vector<Form> partials() const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Substitutes images[i] for variable i. Images may have different degrees
    // as long as the result comes out homogeneous; otherwise NotHomogeneous.
    Form substitute(const std::vector<Form>& images) const;

    // Same form over a larger variable list; slot_of[i] is the new index of
    // old variable i.
    Form embed(std::vector<std::string> new_vars, const std::vector<size_t>& slot_of) const;

    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);

    std::vector<std::string> vars_;
    unsigned degree_;
    TermMap terms_;

    friend Form apply_operator(const Form& q, const Form& f);
};

// q(d/dx_0, ..., d/dx_n) . f  — plain iterated differentiation, no factorial
// rescaling. Degree drops by deg q (zero form if it would go negative).
Form apply_operator(const Form& q, const Form& f);

// Exact quotient f / divisor, or nullopt if divisor does not divide f.
std::optional<Form> exact_divide(const Form& f, const Form& divisor);

// f(n_0/den, ..., n_k/den) cleared of denominators: the substitution must
// produce a polynomial, i.e. den^deg(f) must divide f(numerators...);
// otherwise NonPolynomialResult.
Form substitute_with_denominator(const Form& f, const std::vector<Form>& numerators, const Form& den);

// Greatest common monomial factor of the support (all-zero exponents if f=0).
Monomial monomial_content(const Form& f);

// gcd of two forms supported on the same two variables (binary forms factor
// over the closure, so gcd reduces to the univariate Euclid after stripping
// powers of each variable). Returns a monic-normalized gcd.
Form binary_gcd(const Form& a, const Form& b);

// True if every monomial of f uses at most the two variables ui and vi.
bool supported_on_pair(const Form& f, size_t ui, size_t vi);

}  // namespace lefschetz
