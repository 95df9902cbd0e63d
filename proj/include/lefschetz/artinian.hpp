#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

// The quotient A = S/Ann_S(f) is assembled degree by degree from kernels and
// ranks of contraction matrices; the socle degree bounds everything.

// Matrix of S_k -> R_{d-k}, q |-> q.f. Rows are indexed by the degree-(d-k)
// monomials, columns by the degree-k monomials, both lex-descending.
QMatrix contraction_matrix(const Form& f, unsigned k);

// Kernel of the contraction map as operator polynomials over f's variables
// (positional pairing). For k > deg f this is all of S_k.
std::vector<Form> ann_graded_basis(const Form& f, unsigned k);

// h_k = dim S_k - dim Ann_k for k = 0..deg f.
HilbertVector hilbert_vector(const Form& f);

// Lexicographically-first monomial subset whose contraction columns are
// independent; its size is h_k.
std::vector<Monomial> basis_of_Ak(const Form& f, unsigned k);

// Matrix of multiplication by L^c from A_i to A_{i+c} in the chosen monomial
// bases. Coordinates are recovered through the contraction pairing.
QMatrix multiplication_matrix(const Form& f, const Form& L, unsigned i, unsigned c);

struct GradedPiece {
    std::vector<Form> ann_basis;
    std::vector<Monomial> basis;
    long long h = 0;
};

struct GradedAlgebraView {
    Form f;
    unsigned socle_degree = 0;
    std::vector<GradedPiece> pieces;  // index = degree, 0..socle_degree

    static GradedAlgebraView build(const Form& f);
    HilbertVector h_vector() const;
};

struct AnnSetReport {
    bool all_annihilate = true;
    std::vector<size_t> failing_generators;
    // (degree, dim of the span of S-multiples, dim Ann_k)
    std::vector<std::tuple<unsigned, long long, long long>> per_degree;
    std::vector<unsigned> mismatched_degrees;

    bool ok() const { return all_annihilate && mismatched_degrees.empty(); }
    std::string str() const;
};

// Checks that every generator annihilates f and that in each degree k <= d
// the S-multiples of the generators span exactly Ann_k.
AnnSetReport verify_annihilator_set(const Form& f, const std::vector<Form>& gens);

}  // namespace lefschetz
