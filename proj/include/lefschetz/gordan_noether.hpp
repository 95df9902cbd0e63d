#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/form.hpp"

namespace lefschetz {

// Homogeneous algebraic relation among the partials of a form: g lives in
// fresh variables, one per partial, and g(grad f) = 0 identically.
struct AlgebraicRelation {
    Form g;
    unsigned degree = 0;
};

// System h with every component annihilated by the derivation sum h_j d/dx_j.
struct SelfVanishingSystem {
    std::vector<Form> h;
    std::optional<Form> source_relation;
};

// Bounded-degree search: for e = 1..max_degree, the coefficient space of
// degree-e candidates maps linearly onto forms of degree e(d-1); the first
// nonzero kernel yields the relation (canonical = first kernel basis vector).
std::optional<AlgebraicRelation> find_min_relation(const Form& f, unsigned max_degree);

// h_j = (dg/dy_j)(grad f), reduced by the gcd of the nonzero components, with
// the syzygy and self-vanishing conclusions verified before returning.
SelfVanishingSystem build_svs(const Form& f, const AlgebraicRelation& rel);

bool is_self_vanishing(const std::vector<Form>& h);

// Gaussian-rational forms, re + i*im, for the occasional complex system.
struct GaussForm {
    Form re, im;
};
bool is_self_vanishing(const std::vector<GaussForm>& h);

// f(x + t h(x)) = f(x): checked symbolically through the graded pieces of the
// polarization expansion, then cross-checked at random exact points.
bool verify_gn_identity(const Form& f, const SelfVanishingSystem& svs);

struct RationalMap {
    std::vector<Form> numerators;
    Form denominator;
};

struct CremonaReduction {
    Form reduced;  // same variable slots, read as the s-coordinates
    RationalMap forward;   // s_i as rational functions of x
    RationalMap backward;  // x_i as rational functions of s
    size_t pivot = 0;
};

// Substitutes s_i = x_i - (h_i/h_pivot) x_pivot and verifies that the reduced
// form (the pivot variable set to zero) pulls back to f exactly.
CremonaReduction cremona_reduce(const Form& f, const SelfVanishingSystem& svs, size_t pivot);

}  // namespace lefschetz
