#pragma once

#include <vector>

namespace lefschetz {

// Exponent vector, one slot per declared variable.
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    }
    size_t nvars() const { return e.size(); }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    bool divides(const Monomial& o) const {
        if (e.size() != o.e.size()) return false;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m(e);
        for (size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
        return m;
    }
    // caller guarantees divisibility
    Monomial operator/(const Monomial& o) const {
        Monomial m(e);
        for (size_t i = 0; i < e.size(); ++i) m.e[i] -= o.e[i];
        return m;
    }
};

// Pure lexicographic comparison on exponent sequences.
inline int lex_compare(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    if (a.e.size() != b.e.size()) return a.e.size() > b.e.size() ? 1 : -1;
    return 0;
}

// Map comparator giving lex-descending iteration: the monomial heaviest in the
// first variable comes first. All matrix row/column orders follow it.
struct LexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

// All degree-k monomials in nvars variables, lex-descending.
std::vector<Monomial> monomials_of_degree(size_t nvars, unsigned k);

}  // namespace lefschetz
