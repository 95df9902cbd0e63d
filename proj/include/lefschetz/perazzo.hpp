#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/binary.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/sequences.hpp"

namespace lefschetz {

// f = x0 p0(u,v) + x1 p1(u,v) + x2 p2(u,v) + g(u,v) with p_i of degree d-1,
// linearly independent (hence algebraically dependent), g of degree d.
// Variable convention: (x0, x1, x2, u, v).
struct PerazzoForm {
    unsigned d = 0;
    BinaryForm p0, p1, p2;  // degree d-1
    BinaryForm g;           // degree d, possibly zero
    Form assembled;

    static const std::vector<std::string>& var_names();
};

PerazzoForm build_perazzo(const BinaryForm& p0, const BinaryForm& p1, const BinaryForm& p2,
                          const BinaryForm& g);

// Catalecticant blocks of p0, p1, p2, g at level k together with the
// assembled matrices: M_k = (A_{k-1} | B_{k-1} | C_{k-1}),
// N_k = stacked (A_k; B_k; C_k), N'_k = N_k extended by G_k.
struct BlockMatrices {
    QMatrix A, B, C, G;
    QMatrix M, N, Nprime;
};

BlockMatrices block_matrices(const PerazzoForm& f, unsigned k);

// h_0 = h_d = 1, h_1 = h_{d-1} = 5, h_k = rank M_k + rank N'_k in between.
HilbertVector perazzo_hilbert(const PerazzoForm& f);

// A hypersurface is a cone iff its partials are linearly dependent.
bool is_cone(const Form& f);

// The overlapping-support construction attaining the maximum h-vector,
// d = 3r + eps: p0 on indices 0..r, p1 on r..2r-1+eps, p2 on 2r-1+eps..d-1,
// coefficient C(d-1, i)/(1+i), g = 0.
PerazzoForm maximal_example(unsigned d);

enum class MinimalFamily { I, II, III };

struct MinimalParams {
    Rational lambda = 1, mu = 1;  // family III only, both nonzero
    Rational a = 0, b = 0, c = 0;
};

// The three families with minimal h-vector (1,5,6,...,6,5,1).
PerazzoForm minimal_family(MinimalFamily family, unsigned d, const MinimalParams& params = {});

HilbertVector minimal_hvector(unsigned d);
HilbertVector maximal_hvector(unsigned d);

enum class ExtremalClass { Minimal, Maximal, Intermediate };
std::string extremal_class_name(ExtremalClass c);

struct ExtremalResult {
    ExtremalClass cls;
    HilbertVector h;
};

ExtremalResult classify_extremal(const PerazzoForm& f);

// Recognize the (x0,x1,x2,u,v) shape in a 5-variable form; nullopt when the
// form is not of that shape.
std::optional<PerazzoForm> perazzo_from_form(const Form& f);

}  // namespace lefschetz
