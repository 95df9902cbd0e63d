#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

using FormMatrix = std::vector<std::vector<Form>>;

// (n+1) x (n+1) matrix of second partials.
FormMatrix hessian_matrix(const Form& f);

// Symbolic determinant by cofactor expansion along the sparsest row.
Form det_symbolic(const FormMatrix& m);

struct HessianSpec {
    Form f;
    unsigned k = 0;
    std::vector<Monomial> basis;
    FormMatrix entries;  // entries[i][j] = (basis_i * basis_j) . f
};

// k-th Hessian over the greedy-lex monomial basis of A_k.
HessianSpec higher_hessian(const Form& f, unsigned k);

// Entries for an arbitrary basis of A_k given by operator polynomials.
FormMatrix hessian_entries_for_basis(const Form& f, const std::vector<Form>& basis);

enum class VanishStatus { NonzeroCertified, ZeroProbabilistic, ZeroSymbolic };
std::string vanish_status_name(VanishStatus s);

struct VanishingVerdict {
    VanishStatus status;
    std::optional<std::vector<Rational>> witness;  // point with det != 0
    int trials = 0;                                // evaluation count

    bool is_zero() const { return status != VanishStatus::NonzeroCertified; }
};

struct VanishOptions {
    uint64_t seed = 1;
    int lines = 3;
    long coord_bound = 9;
    long symbolic_max_size = 6;
};

// Size <= symbolic_max_size: exact symbolic determinant. Larger: restrict to
// random lines p + t q and test the degree-D univariate determinant at D+1
// exact points per line.
VanishingVerdict vanishing_verdict(const FormMatrix& m, const VanishOptions& opts = {});

// Max rank of Hess(f) over a few random integer points; a lower bound that is
// the generic rank with overwhelming probability.
long hessian_generic_rank(const Form& f, uint64_t seed = 1, int points = 5);

}  // namespace lefschetz
