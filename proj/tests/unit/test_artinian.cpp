#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lefschetz/artinian.hpp"
#include "lefschetz/binary.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/parse.hpp"

using namespace lefschetz;
using testutil::random_form;

namespace {

const std::vector<std::string> IK{"x", "y", "z", "t"};
const std::vector<std::string> PV{"x0", "x1", "x2", "u", "v"};

Form ikeda() { return parse_form("x*z^3*t + y*z*t^3 + x^3*y^2", IK); }

}  // namespace

TEST_CASE("contraction matrix at level zero lists the coefficients") {
    const Form f = parse_form("u^2*x + u*v*y + v^2*z", {"x", "y", "z", "u", "v"});
    const QMatrix m = contraction_matrix(f, 0);
    REQUIRE(m.cols() == 1);
    REQUIRE(m.rows() == 35);
    long nonzero = 0;
    for (long r = 0; r < m.rows(); ++r)
        if (m.at(r, 0) != 0) ++nonzero;
    REQUIRE(nonzero == 3);
}

TEST_CASE("contraction of a binary form matches the catalecticant up to diagonal scale") {
    Rng rng(77);
    const std::vector<std::string> uv{"u", "v"};
    for (int i = 0; i < 20; ++i) {
        const unsigned t = static_cast<unsigned>(rng.int_in(2, 7));
        const BinaryForm h = testutil::random_binary(rng, t);
        const unsigned k = static_cast<unsigned>(rng.int_in(0, t));
        const QMatrix contraction = contraction_matrix(h.to_form(uv), k);
        const QMatrix cat = cat_matrix(h, k);
        REQUIRE(contraction.rows() == cat.rows());
        REQUIRE(contraction.cols() == cat.cols());
        // row scale: falling(t,k) * C(t-k, i)
        for (long r = 0; r < cat.rows(); ++r) {
            const Rational scale =
                Rational(falling_factorial(t, k)) * Rational(binomial(t - k, static_cast<unsigned long>(r)));
            for (long c = 0; c < cat.cols(); ++c)
                REQUIRE(contraction.at(r, c) == cat.at(r, c) * scale);
        }
        REQUIRE(rank(contraction) == rank(cat));
    }
}

TEST_CASE("Perazzo cubic has independent partials at level one") {
    const Form f = parse_form("u^2*x + u*v*y + v^2*z", {"x", "y", "z", "u", "v"});
    REQUIRE(rank(contraction_matrix(f, 1)) == 5);
}

TEST_CASE("quintic example annihilator structure") {
    const Form f = ikeda();
    REQUIRE(ann_graded_basis(f, 2).empty());  // h_2 = dim S_2 = 10
    const auto deg3 = ann_graded_basis(f, 3);
    REQUIRE_FALSE(deg3.empty());
    REQUIRE(apply_operator(parse_form("x*t^2", IK), f).is_zero());
    for (const auto& q : deg3) REQUIRE(apply_operator(q, f).is_zero());
}

TEST_CASE("annihilator basis above the socle degree is all of S_k") {
    const Form f = parse_form("x^2", {"x", "y"});
    REQUIRE(ann_graded_basis(f, 3).size() == 4);
}

TEST_CASE("known Hilbert vectors") {
    REQUIRE(hilbert_vector(ikeda()) == HilbertVector{1, 4, 10, 10, 4, 1});
    const Form f1 = parse_form("u^5*x0 + u^4*v*x0 + u^3*v^2*x1 + v^5*x2", PV);
    REQUIRE(hilbert_vector(f1) == HilbertVector{1, 5, 7, 8, 7, 5, 1});
    const Form xd = parse_form("x^4", {"x"});
    REQUIRE(hilbert_vector(xd) == HilbertVector{1, 1, 1, 1, 1});
    REQUIRE_THROWS_AS(hilbert_vector(Form({"x"}, 2)), ZeroFormError);
}

TEST_CASE("Hilbert vectors of nonzero forms are symmetric") {
    Rng rng(101);
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    for (int i = 0; i < 50; ++i) {
        const unsigned deg = static_cast<unsigned>(rng.int_in(1, 6));
        const auto h = hilbert_vector(random_form(rng, vars, deg, 5));
        REQUIRE(is_symmetric(h));
    }
}

TEST_CASE("graded piece dimensions match the closed binomial formula") {
    for (size_t nvars : {2u, 3u, 5u})
        for (unsigned k = 0; k <= 6; ++k)
            REQUIRE(monomials_of_degree(nvars, k).size() ==
                    binomial(nvars - 1 + k, k).get_ui());
}

TEST_CASE("greedy basis of the middle piece") {
    const Form f = ikeda();
    REQUIRE(basis_of_Ak(f, 0) == std::vector<Monomial>{Monomial(4)});
    const auto basis2 = basis_of_Ak(f, 2);
    REQUIRE(basis2.size() == 10);  // all monomials survive
    const auto basis3 = basis_of_Ak(f, 3);
    REQUIRE(basis3.size() == 10);
    // chosen columns are independent by construction: rank check
    const QMatrix m = contraction_matrix(f, 3);
    const auto cols = monomials_of_degree(4, 3);
    QMatrix sub(m.rows(), static_cast<long>(basis3.size()));
    long filled = 0;
    for (size_t j = 0; j < cols.size(); ++j) {
        if (std::find(basis3.begin(), basis3.end(), cols[j]) == basis3.end()) continue;
        for (long r = 0; r < m.rows(); ++r) sub.at(r, filled) = m.at(r, static_cast<long>(j));
        ++filled;
    }
    REQUIRE(rank(sub) == 10);
}

TEST_CASE("multiplication by the identity power is the identity matrix") {
    const Form f = ikeda();
    const Form L = parse_form("x + 2*y - z + t", IK);
    REQUIRE(multiplication_matrix(f, L, 1, 0) == QMatrix::identity(4));
}

TEST_CASE("multiplication maps on the quintic example") {
    const Form f = ikeda();
    Rng rng(303);
    // x L^3 : A_1 -> A_4 is generically an isomorphism
    {
        Form::TermMap tm;
        for (size_t i = 0; i < 4; ++i) {
            Monomial m(4);
            m.e[i] = 1;
            tm.emplace(m, Rational(rng.nonzero_in(-9, 9)));
        }
        const Form L = Form::from_terms(IK, tm, 1);
        REQUIRE(rank(multiplication_matrix(f, L, 1, 3)) == 4);
    }
    // x L : A_2 -> A_3 is never an isomorphism
    for (int trial = 0; trial < 5; ++trial) {
        Form::TermMap tm;
        for (size_t i = 0; i < 4; ++i) {
            Monomial m(4);
            m.e[i] = 1;
            tm.emplace(m, Rational(rng.nonzero_in(-9, 9)));
        }
        const Form L = Form::from_terms(IK, tm, 1);
        REQUIRE(rank(multiplication_matrix(f, L, 2, 1)) < 10);
    }
}

TEST_CASE("multiplication matrices compose") {
    Rng rng(404);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int i = 0; i < 8; ++i) {
        const Form f = random_form(rng, vars, 4, 6);
        Form::TermMap tm;
        for (size_t j = 0; j < 3; ++j) {
            Monomial m(3);
            m.e[j] = 1;
            tm.emplace(m, Rational(rng.nonzero_in(-5, 5)));
        }
        const Form L = Form::from_terms(vars, tm, 1);
        const QMatrix ab = multiplication_matrix(f, L, 1, 2);
        const QMatrix a = multiplication_matrix(f, L, 1, 1);
        const QMatrix b = multiplication_matrix(f, L, 2, 1);
        // compose: (x L): A_2 -> A_3 after (x L): A_1 -> A_2
        REQUIRE(ab.rows() == b.rows());
        QMatrix prod(b.rows(), a.cols());
        for (long r = 0; r < prod.rows(); ++r)
            for (long c = 0; c < prod.cols(); ++c) {
                Rational s = 0;
                for (long k = 0; k < b.cols(); ++k) s += b.at(r, k) * a.at(k, c);
                prod.at(r, c) = s;
            }
        REQUIRE(prod == ab);
    }
}

TEST_CASE("the duality pairing on chosen bases is nondegenerate") {
    Rng rng(505);
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    for (int i = 0; i < 10; ++i) {
        const unsigned deg = static_cast<unsigned>(rng.int_in(2, 5));
        const Form f = random_form(rng, vars, deg, 6);
        for (unsigned k = 0; 2 * k <= deg; ++k) {
            const auto bk = basis_of_Ak(f, k);
            const auto bdk = basis_of_Ak(f, deg - k);
            REQUIRE(bk.size() == bdk.size());
            QMatrix pairing(static_cast<long>(bk.size()), static_cast<long>(bdk.size()));
            for (size_t r = 0; r < bk.size(); ++r)
                for (size_t c = 0; c < bdk.size(); ++c) {
                    const Form prod = Form::monomial_form(vars, bk[r] * bdk[c], Rational(1));
                    const Form val = apply_operator(prod, f);
                    pairing.at(static_cast<long>(r), static_cast<long>(c)) =
                        val.is_zero() ? Rational(0) : val.terms().begin()->second;
                }
            REQUIRE(rank(pairing) == static_cast<long>(bk.size()));
        }
    }
}

TEST_CASE("annihilator generator verification flags missing generators") {
    const Form f = parse_form("x^2", {"x", "y"});
    const auto report = verify_annihilator_set(f, {});
    REQUIRE_FALSE(report.ok());
    REQUIRE(std::find(report.mismatched_degrees.begin(), report.mismatched_degrees.end(), 1u) !=
            report.mismatched_degrees.end());
}

TEST_CASE("published generator list for the quintic example verifies") {
    const Form f = ikeda();
    const std::vector<const char*> gens{
        "x*t^2", "y^2*t", "x*y*t", "x^2*t", "y*z^2", "x*z^2 - y*t^2",
        "y^2*z", "x*y*z", "x^2*z", "y^3", "t^4", "z^2*t^2", "z^4",
        "x^2*y^2 - 2*z^3*t", "x^3*y - 2*z*t^3", "x^4"};
    std::vector<Form> ops;
    for (const char* s : gens) ops.push_back(parse_form(s, IK));
    const auto report = verify_annihilator_set(f, ops);
    REQUIRE(report.all_annihilate);
    REQUIRE(report.ok());
}

TEST_CASE("published generator lists for the two sextic/septic examples verify") {
    // the generator lists match the binomially-normalized reading of the forms
    const Form f1 = parse_form("u^5*x0 + 5*u^4*v*x0 + 10*u^3*v^2*x1 + v^5*x2", PV);
    const std::vector<const char*> gens1{
        "x2*u", "x0*u - x0*v - x1*v", "x0^2", "x1^2", "x2^2", "x0*x1", "x0*x2",
        "x1*x2", "x0*v^2", "u*v^3", "x1*u^3 - x2*v^3", "u^5 - u^4*v", "u^6", "v^6"};
    std::vector<Form> ops1;
    for (const char* s : gens1) ops1.push_back(parse_form(s, PV));
    const auto report1 = verify_annihilator_set(f1, ops1);
    REQUIRE(report1.all_annihilate);
    REQUIRE(report1.ok());

    const Form f2 = parse_form("u^6*x0 + 20*u^3*v^3*x1 + v^6*x2", PV);
    const std::vector<const char*> gens2{
        "x0^2", "x1^2", "x2^2", "x0*x1", "x0*x2", "x1*x2", "x0*v", "x2*u",
        "x1*u^3 - x2*v^3", "x0*u^3 - x1*v^3", "u*v^4", "u^4*v", "v^7", "u^7"};
    std::vector<Form> ops2;
    for (const char* s : gens2) ops2.push_back(parse_form(s, PV));
    const auto report2 = verify_annihilator_set(f2, ops2);
    REQUIRE(report2.all_annihilate);
    REQUIRE(report2.ok());
}

TEST_CASE("graded view collects consistent per-degree data") {
    const Form f = ikeda();
    const auto view = GradedAlgebraView::build(f);
    REQUIRE(view.socle_degree == 5);
    REQUIRE(view.h_vector() == hilbert_vector(f));
    for (unsigned k = 0; k <= 5; ++k) {
        REQUIRE(view.pieces[k].ann_basis.size() + view.pieces[k].basis.size() ==
                monomials_of_degree(4, k).size());
    }
}
