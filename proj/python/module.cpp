// Python bindings for the main operations. Exact rationals cross the
// boundary as "num/den" strings; h-vectors as lists of ints.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lefschetz/artinian.hpp"
#include "lefschetz/binary.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/gordan_noether.hpp"
#include "lefschetz/hessians.hpp"
#include "lefschetz/lefschetz_props.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/perazzo.hpp"
#include "lefschetz/sequences.hpp"

namespace py = pybind11;
using namespace lefschetz;

namespace {

BinaryForm binary_from_strings(const std::vector<std::string>& plain) {
    std::vector<Rational> coeffs;
    coeffs.reserve(plain.size());
    for (const auto& s : plain) coeffs.push_back(parse_rational(s));
    return BinaryForm::from_plain(coeffs);
}

py::list matrix_to_list(const QMatrix& m) {
    py::list rows;
    for (long r = 0; r < m.rows(); ++r) {
        py::list row;
        for (long c = 0; c < m.cols(); ++c) row.append(rat_str(m.at(r, c)));
        rows.append(row);
    }
    return rows;
}

py::dict wlp_to_dict(const WlpVerdict& w) {
    py::dict d;
    d["status"] = verdict_status_name(w.status);
    d["certificate"] = w.certificate;
    if (w.witness) d["witness"] = w.witness->str();
    return d;
}

py::dict slp_to_dict(const SlpVerdict& s) {
    py::dict d;
    d["status"] = verdict_status_name(s.status);
    if (s.failing_k) d["failing_k"] = *s.failing_k;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact inverse-system computations: Hilbert vectors, Hessians, "
              "Lefschetz properties, catalecticants, Waring decompositions";

    py::register_exception<Error>(m, "LefschetzError");

    m.def(
        "hilbert_vector",
        [](const std::string& form, const std::vector<std::string>& vars) {
            return hilbert_vector(parse_form(form, vars));
        },
        py::arg("form"), py::arg("vars"));

    m.def(
        "annihilator_basis",
        [](const std::string& form, const std::vector<std::string>& vars, unsigned k) {
            const Form f = parse_form(form, vars);
            const auto opnames = operator_names(vars);
            std::vector<size_t> slots(vars.size());
            for (size_t i = 0; i < slots.size(); ++i) slots[i] = i;
            std::vector<std::string> out;
            for (const auto& q : ann_graded_basis(f, k)) out.push_back(q.embed(opnames, slots).str());
            return out;
        },
        py::arg("form"), py::arg("vars"), py::arg("k"));

    m.def(
        "is_cone",
        [](const std::string& form, const std::vector<std::string>& vars) {
            return is_cone(parse_form(form, vars));
        },
        py::arg("form"), py::arg("vars"));

    m.def(
        "hessian_verdict",
        [](const std::string& form, const std::vector<std::string>& vars, unsigned k, uint64_t seed) {
            const Form f = parse_form(form, vars);
            const auto spec = higher_hessian(f, k);
            const auto v = vanishing_verdict(spec.entries, {seed});
            py::dict d;
            d["status"] = vanish_status_name(v.status);
            d["size"] = spec.entries.size();
            d["trials"] = v.trials;
            return d;
        },
        py::arg("form"), py::arg("vars"), py::arg("k") = 1, py::arg("seed") = 1);

    m.def(
        "wlp",
        [](const std::string& form, const std::vector<std::string>& vars, int trials, uint64_t seed) {
            return wlp_to_dict(wlp_verdict(parse_form(form, vars), trials, seed));
        },
        py::arg("form"), py::arg("vars"), py::arg("trials") = 5, py::arg("seed") = 1);

    m.def(
        "slp",
        [](const std::string& form, const std::vector<std::string>& vars, uint64_t seed) {
            return slp_to_dict(slp_verdict(parse_form(form, vars), seed));
        },
        py::arg("form"), py::arg("vars"), py::arg("seed") = 1);

    m.def(
        "border_rank",
        [](const std::vector<std::string>& plain) { return border_rank(binary_from_strings(plain)); },
        py::arg("plain_coeffs"));

    m.def(
        "catalecticant",
        [](const std::vector<std::string>& plain, unsigned k) {
            return matrix_to_list(cat_matrix(binary_from_strings(plain), k));
        },
        py::arg("plain_coeffs"), py::arg("k"));

    m.def(
        "secant_position",
        [](const std::vector<std::string>& plain) {
            return secant_position_name(classify_secant_position(binary_from_strings(plain)));
        },
        py::arg("plain_coeffs"));

    m.def(
        "sylvester",
        [](const std::vector<std::string>& plain) {
            const auto dec = sylvester_decompose(binary_from_strings(plain));
            py::dict d;
            d["exactness"] = exactness_name(dec.exactness);
            d["kernel_degree"] = dec.kernel_degree;
            py::list terms;
            if (dec.exactness == Exactness::NumericApprox) {
                for (const auto& t : dec.numeric_terms) {
                    py::dict term;
                    term["coefficient"] = t.coeff;
                    term["linear_form"] = py::make_tuple(t.ell[0], t.ell[1]);
                    terms.append(term);
                }
            } else {
                for (const auto& t : dec.terms) {
                    py::dict term;
                    term["coefficient"] = py::make_tuple(rat_str(t.coeff.re), rat_str(t.coeff.im));
                    term["linear_form"] = py::make_tuple(
                        py::make_tuple(rat_str(t.ell.a.re), rat_str(t.ell.a.im)),
                        py::make_tuple(rat_str(t.ell.b.re), rat_str(t.ell.b.im)));
                    terms.append(term);
                }
            }
            d["terms"] = terms;
            return d;
        },
        py::arg("plain_coeffs"));

    m.def(
        "perazzo_hilbert",
        [](const std::vector<std::string>& p0, const std::vector<std::string>& p1,
           const std::vector<std::string>& p2, const std::vector<std::string>& g) {
            const BinaryForm b0 = binary_from_strings(p0);
            const BinaryForm bg = g.empty() ? BinaryForm::zero(b0.t + 1) : binary_from_strings(g);
            const auto f = build_perazzo(b0, binary_from_strings(p1), binary_from_strings(p2), bg);
            py::dict d;
            d["form"] = f.assembled.str();
            d["hvector"] = perazzo_hilbert(f);
            d["class"] = extremal_class_name(classify_extremal(f).cls);
            return d;
        },
        py::arg("p0"), py::arg("p1"), py::arg("p2"), py::arg("g") = std::vector<std::string>{});

    m.def(
        "perazzo_maximal",
        [](unsigned d) {
            const auto f = maximal_example(d);
            py::dict out;
            out["form"] = f.assembled.str();
            out["hvector"] = perazzo_hilbert(f);
            return out;
        },
        py::arg("d"));

    m.def(
        "perazzo_minimal",
        [](const std::string& family, unsigned d) {
            MinimalFamily fam = MinimalFamily::I;
            if (family == "II") fam = MinimalFamily::II;
            if (family == "III") fam = MinimalFamily::III;
            const auto f = minimal_family(fam, d, {});
            py::dict out;
            out["form"] = f.assembled.str();
            out["hvector"] = perazzo_hilbert(f);
            return out;
        },
        py::arg("family"), py::arg("d"));

    m.def(
        "min_relation",
        [](const std::string& form, const std::vector<std::string>& vars, unsigned max_degree) -> py::object {
            const auto rel = find_min_relation(parse_form(form, vars), max_degree);
            if (!rel) return py::none();
            return py::str(rel->g.str());
        },
        py::arg("form"), py::arg("vars"), py::arg("max_degree") = 4);

    m.def(
        "self_vanishing_system",
        [](const std::string& form, const std::vector<std::string>& vars, unsigned max_degree) {
            const Form f = parse_form(form, vars);
            const auto rel = find_min_relation(f, max_degree);
            if (!rel) throw Error("no relation up to the requested degree");
            const auto svs = build_svs(f, *rel);
            std::vector<std::string> out;
            for (const auto& c : svs.h) out.push_back(c.str());
            return out;
        },
        py::arg("form"), py::arg("vars"), py::arg("max_degree") = 4);

    m.def("m_bracket", &m_bracket, py::arg("m"), py::arg("s"));
    m.def("is_o_sequence", &is_O_sequence, py::arg("h"));
    m.def("is_si_sequence", &is_SI_sequence, py::arg("h"));
    m.def("stanley_doubling", &stanley_doubling, py::arg("hT"), py::arg("t"));
}
