#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz {

// Binary form in normalized coordinates: h(u,v) = sum_i C(t,i) h_i u^{t-i} v^i.
// The plain coefficient of u^{t-i} v^i is C(t,i) * h_i.
struct BinaryForm {
    unsigned t = 0;
    std::vector<Rational> h;  // h_0 .. h_t

    BinaryForm() = default;
    BinaryForm(unsigned degree, std::vector<Rational> coords);

    static BinaryForm zero(unsigned degree);
    static BinaryForm from_plain(const std::vector<Rational>& plain);

    bool is_zero() const;
    std::vector<Rational> plain_coeffs() const;
    Form to_form(const std::vector<std::string>& uv_names) const;
    // f must be supported on exactly the two given variable indices
    static BinaryForm from_form(const Form& f, size_t ui, size_t vi);

    bool operator==(const BinaryForm& o) const { return t == o.t && h == o.h; }
    std::string str(const std::string& u = "u", const std::string& v = "v") const;
};

// (t-k+1) x (k+1) Hankel matrix with entry (i, j) = h_{i+j}.
QMatrix cat_matrix(const BinaryForm& h, unsigned k);

// Symmetric border rank = rank of the middle catalecticant.
long border_rank(const BinaryForm& h);

enum class SecantPosition { PurePower, RankTwo, Tangent, RankThree, JoinTangent, Beyond };
std::string secant_position_name(SecantPosition p);

// Border rank 1 -> PurePower; 2 -> RankTwo vs Tangent by square-freeness of
// the degree-2 apolar kernel polynomial; 3 -> RankThree vs JoinTangent by the
// degree-3 kernel polynomial; otherwise Beyond.
SecantPosition classify_secant_position(const BinaryForm& h);

// (a, b) -> (b, -a) on degree-1 forms.
BinaryForm apolar_dual(const BinaryForm& linear);

enum class Exactness { ExactQ, ExactQi, NumericApprox };
std::string exactness_name(Exactness e);

// A linear form a*u + b*v over the Gaussian rationals, scaled so its first
// nonzero coordinate is 1; the scalar multiplier stays outside in the term.
struct GaussLinear {
    Gaussian a, b;
    std::string str(const std::string& u = "u", const std::string& v = "v") const;
};

struct WaringTerm {
    Gaussian coeff;
    GaussLinear ell;
};

struct NumericWaringTerm {
    std::complex<double> coeff;
    std::array<std::complex<double>, 2> ell;
};

struct WaringDecomposition {
    Exactness exactness = Exactness::ExactQ;
    unsigned degree = 0;
    unsigned kernel_degree = 0;  // apolar degree at which the split happened
    std::vector<WaringTerm> terms;
    std::vector<NumericWaringTerm> numeric_terms;

    size_t size() const { return exactness == Exactness::NumericApprox ? numeric_terms.size() : terms.size(); }
    std::string str() const;
};

// Sylvester's algorithm: walk k up from the border rank, pick a kernel
// element of the apolar map with distinct roots, dualize its factors and
// solve for the coefficients.
WaringDecomposition sylvester_decompose(const BinaryForm& h);

// Normalized coordinate vector of sum coeff_j * ell_j^t over the Gaussians.
std::vector<Gaussian> expand_waring(const std::vector<WaringTerm>& terms, unsigned t);

}  // namespace lefschetz
