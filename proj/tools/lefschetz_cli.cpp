// Command-line frontend: parses forms, dispatches the computations, prints
// text tables or a machine-readable JSON report. Reports are deterministic
// for a fixed (input, seed); timing goes to stderr only.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz/artinian.hpp"
#include "lefschetz/binary.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/gordan_noether.hpp"
#include "lefschetz/hessians.hpp"
#include "lefschetz/lefschetz_props.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/perazzo.hpp"
#include "lefschetz/sequences.hpp"

using nlohmann::json;
using namespace lefschetz;

namespace {

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

HilbertVector parse_hvector(const std::string& csv) {
    HilbertVector h;
    for (const auto& part : split_list(csv)) h.push_back(std::stoll(part));
    return h;
}

uint64_t default_seed() {
    if (const char* env = std::getenv("LEFSCHETZ_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 1;
}

json matrix_json(const QMatrix& m) {
    json entries = json::array();
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) entries.push_back(rat_str(m.at(r, c)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json hvector_json(const HilbertVector& h) {
    json a = json::array();
    for (long long v : h) a.push_back(v);
    return a;
}

std::string hvector_text(const HilbertVector& h) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ")";
    return os.str();
}

json gauss_json(const Gaussian& g) { return json::array({rat_str(g.re), rat_str(g.im)}); }

json decomposition_json(const WaringDecomposition& dec) {
    json terms = json::array();
    if (dec.exactness == Exactness::NumericApprox) {
        for (const auto& t : dec.numeric_terms) {
            terms.push_back(json{{"coefficient", {t.coeff.real(), t.coeff.imag()}},
                                 {"linear_form",
                                  {{t.ell[0].real(), t.ell[0].imag()}, {t.ell[1].real(), t.ell[1].imag()}}}});
        }
    } else {
        for (const auto& t : dec.terms) {
            terms.push_back(json{{"coefficient", gauss_json(t.coeff)},
                                 {"linear_form", {gauss_json(t.ell.a), gauss_json(t.ell.b)}}});
        }
    }
    return json{{"exactness", exactness_name(dec.exactness)},
                {"degree", dec.degree},
                {"kernel_degree", dec.kernel_degree},
                {"terms", terms}};
}

json wlp_json(const WlpVerdict& w) {
    json out{{"status", verdict_status_name(w.status)}, {"certificate", w.certificate}};
    if (w.witness) out["witness"] = w.witness->str();
    if (w.hessian_k) out["hessian_k"] = *w.hessian_k;
    return out;
}

json slp_json(const SlpVerdict& s) {
    json out{{"status", verdict_status_name(s.status)}, {"certificate", ""}};
    if (s.failing_k) {
        out["certificate"] = "vanishing Hessian of order " + std::to_string(*s.failing_k);
        out["failing_k"] = *s.failing_k;
    }
    if (s.witness_point) {
        json p = json::array();
        for (const auto& c : *s.witness_point) p.push_back(rat_str(c));
        out["witness_point"] = p;
    }
    return out;
}

struct Emitter {
    bool as_json = false;
    json report;

    void finish_text(const std::string& text) {
        if (as_json) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << text;
        }
    }
};

std::vector<std::string> forms_from_input(const std::string& form, const std::string& form_file) {
    std::vector<std::string> texts;
    if (!form.empty()) texts.push_back(form);
    if (!form_file.empty()) {
        std::ifstream in(form_file);
        if (!in) throw InvalidInput("cannot open form file '" + form_file + "'");
        std::string line;
        while (std::getline(in, line)) {
            std::string stripped;
            for (char c : line)
                if (!isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
            if (!stripped.empty()) texts.push_back(line);
        }
    }
    if (texts.empty()) throw InvalidInput("no input form given (use --form or --form-file)");
    return texts;
}

PerazzoForm perazzo_from_options(const std::string& p0, const std::string& p1, const std::string& p2,
                                 const std::string& g, const std::string& bvars_csv) {
    const auto bvars = split_list(bvars_csv);
    if (bvars.size() != 2) throw InvalidInput("--bvars needs exactly two names");
    const Form f0 = parse_form(p0, bvars);
    const Form f1 = parse_form(p1, bvars);
    const Form f2 = parse_form(p2, bvars);
    const unsigned dm1 = std::max({f0.degree(), f1.degree(), f2.degree()});
    auto to_binary = [&](const Form& f) {
        if (f.is_zero()) return BinaryForm::zero(dm1);
        return BinaryForm::from_form(f, 0, 1);
    };
    BinaryForm bg = BinaryForm::zero(dm1 + 1);
    if (!g.empty()) {
        const Form fg = parse_form(g, bvars);
        if (!fg.is_zero()) bg = BinaryForm::from_form(fg, 0, 1);
    }
    return build_perazzo(to_binary(f0), to_binary(f1), to_binary(f2), bg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with inverse systems, Hessians and Lefschetz properties"};
    app.require_subcommand(1);

    std::string form, form_file, vars_csv, bvars_csv = "u,v";
    std::string p0_text, p1_text, p2_text, g_text;
    std::string family_text = "I", params_csv, hvec_csv;
    uint64_t seed = default_seed();
    int trials = 5;
    long level_k = -1;
    unsigned degree_d = 0;
    long expand_m = 0;
    int expand_s = 0;
    size_t pivot = 0;
    unsigned max_rel_degree = 4;
    bool as_json = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--vars", vars_csv, "comma-separated variable names");
        cmd->add_option("--form", form, "input form");
        cmd->add_option("--form-file", form_file, "file with one form per line");
        cmd->add_flag("--json", as_json, "emit a JSON report");
        cmd->add_option("--seed", seed, "random seed (default: LEFSCHETZ_SEED or 1)");
    };

    auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert vector of S/Ann(f)");
    add_common(cmd_hilbert);
    auto* cmd_ann = app.add_subcommand("ann", "graded annihilator bases");
    add_common(cmd_ann);
    auto* cmd_hess = app.add_subcommand("hessian", "Hessian matrices and vanishing verdicts");
    add_common(cmd_hess);
    cmd_hess->add_option("--k", level_k, "Hessian order (default 1)");
    auto* cmd_wlp = app.add_subcommand("wlp", "weak Lefschetz verdict");
    add_common(cmd_wlp);
    cmd_wlp->add_option("--trials", trials, "random witness attempts");
    auto* cmd_slp = app.add_subcommand("slp", "strong Lefschetz verdict");
    add_common(cmd_slp);

    auto* cmd_waring = app.add_subcommand("waring", "Waring decomposition of a binary form");
    cmd_waring->add_option("--form", form, "binary form")->required();
    cmd_waring->add_option("--bvars", bvars_csv, "two variable names (default u,v)");
    cmd_waring->add_flag("--json", as_json, "emit a JSON report");
    auto* cmd_cat = app.add_subcommand("catalecticant", "catalecticant matrices of a binary form");
    cmd_cat->add_option("--form", form, "binary form")->required();
    cmd_cat->add_option("--bvars", bvars_csv, "two variable names (default u,v)");
    cmd_cat->add_option("--k", level_k, "level (default: middle)");
    cmd_cat->add_flag("--json", as_json, "emit a JSON report");

    auto* cmd_perazzo = app.add_subcommand("perazzo", "Perazzo 3-fold toolkit");
    cmd_perazzo->require_subcommand(1);
    auto add_perazzo_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--p0", p0_text, "binary form of degree d-1")->required();
        cmd->add_option("--p1", p1_text, "binary form of degree d-1")->required();
        cmd->add_option("--p2", p2_text, "binary form of degree d-1")->required();
        cmd->add_option("--g", g_text, "binary form of degree d (optional)");
        cmd->add_option("--bvars", bvars_csv, "two variable names (default u,v)");
        cmd->add_flag("--json", as_json, "emit a JSON report");
    };
    auto* cmd_pb = cmd_perazzo->add_subcommand("build", "validate and assemble");
    add_perazzo_inputs(cmd_pb);
    auto* cmd_pblocks = cmd_perazzo->add_subcommand("blocks", "block matrices at a level");
    add_perazzo_inputs(cmd_pblocks);
    cmd_pblocks->add_option("--k", level_k, "level")->required();
    auto* cmd_pc = cmd_perazzo->add_subcommand("classify", "extremal classification");
    add_perazzo_inputs(cmd_pc);
    auto* cmd_pm = cmd_perazzo->add_subcommand("maximal", "maximal-h-vector example");
    cmd_pm->add_option("--d", degree_d, "degree")->required();
    cmd_pm->add_flag("--json", as_json, "emit a JSON report");
    auto* cmd_pmin = cmd_perazzo->add_subcommand("minimal", "minimal-h-vector families");
    cmd_pmin->add_option("--d", degree_d, "degree")->required();
    cmd_pmin->add_option("--family", family_text, "I, II or III");
    cmd_pmin->add_option("--params", params_csv, "lambda,mu,a,b,c");
    cmd_pmin->add_flag("--json", as_json, "emit a JSON report");

    auto* cmd_gn = app.add_subcommand("gn", "algebraic relations and Cremona reductions");
    cmd_gn->require_subcommand(1);
    auto add_gn_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--vars", vars_csv, "comma-separated variable names")->required();
        cmd->add_option("--form", form, "input form")->required();
        cmd->add_option("--max-degree", max_rel_degree, "relation search bound (default 4)");
        cmd->add_flag("--json", as_json, "emit a JSON report");
    };
    auto* cmd_gr = cmd_gn->add_subcommand("relation", "minimal algebraic relation among partials");
    add_gn_inputs(cmd_gr);
    auto* cmd_gs = cmd_gn->add_subcommand("svs", "self-vanishing system from the relation");
    add_gn_inputs(cmd_gs);
    auto* cmd_gi = cmd_gn->add_subcommand("identity", "verify the translation identity");
    add_gn_inputs(cmd_gi);
    auto* cmd_gc = cmd_gn->add_subcommand("cremona", "reduction to a cone");
    add_gn_inputs(cmd_gc);
    cmd_gc->add_option("--pivot", pivot, "index of the nonzero system component")->required();

    auto* cmd_seq = app.add_subcommand("sequence", "O/SI-sequence utilities");
    cmd_seq->require_subcommand(1);
    auto* cmd_so = cmd_seq->add_subcommand("o-check", "Macaulay growth check");
    cmd_so->add_option("--hvector", hvec_csv, "comma-separated values")->required();
    cmd_so->add_flag("--json", as_json, "emit a JSON report");
    auto* cmd_ss = cmd_seq->add_subcommand("si-check", "SI-sequence check");
    cmd_ss->add_option("--hvector", hvec_csv, "comma-separated values")->required();
    cmd_ss->add_flag("--json", as_json, "emit a JSON report");
    auto* cmd_se = cmd_seq->add_subcommand("expand", "binomial expansion and bracket");
    cmd_se->add_option("--m", expand_m, "value")->required();
    cmd_se->add_option("--s", expand_s, "expansion index")->required();
    cmd_se->add_flag("--json", as_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        Emitter out;
        out.as_json = as_json;
        out.report["seed"] = seed;

        auto parse_all = [&]() {
            const auto vars = split_list(vars_csv);
            if (vars.empty()) throw InvalidInput("--vars is required for this command");
            std::vector<Form> forms;
            json echoes = json::array();
            for (const auto& text : forms_from_input(form, form_file)) {
                forms.push_back(parse_form(text, vars));
                echoes.push_back(forms.back().str());
            }
            out.report["vars"] = vars;
            if (forms.size() == 1)
                out.report["form"] = forms[0].str();
            else
                out.report["forms"] = echoes;
            return forms;
        };

        if (*cmd_hilbert) {
            out.report["command"] = "hilbert";
            const auto forms = parse_all();
            std::ostringstream text;
            json results = json::array();
            for (const auto& f : forms) {
                const HilbertVector h = hilbert_vector(f);
                results.push_back(json{{"hvector", hvector_json(h)},
                                       {"symmetric", is_symmetric(h)},
                                       {"unimodal", is_unimodal(h)}});
                text << "form: " << f.str() << "\n";
                text << "h-vector: " << hvector_text(h) << "\n";
            }
            out.report["results"] = forms.size() == 1 ? results[0] : results;
            out.finish_text(text.str());
        } else if (*cmd_ann) {
            out.report["command"] = "ann";
            const auto forms = parse_all();
            const Form& f = forms.front();
            const auto view = GradedAlgebraView::build(f);
            const auto opnames = operator_names(f.vars());
            std::vector<size_t> slots(f.nvars());
            for (size_t i = 0; i < slots.size(); ++i) slots[i] = i;
            std::ostringstream text;
            text << "form: " << f.str() << "\n";
            text << "h-vector: " << hvector_text(view.h_vector()) << "\n";
            json per_degree = json::object();
            for (unsigned k = 0; k <= view.socle_degree; ++k) {
                json items = json::array();
                text << "degree " << k << " annihilator basis ("
                     << view.pieces[k].ann_basis.size() << "):\n";
                for (const auto& q : view.pieces[k].ann_basis) {
                    const Form display = q.embed(opnames, slots);
                    items.push_back(display.str());
                    text << "  " << display.str() << "\n";
                }
                per_degree[std::to_string(k)] = items;
            }
            out.report["results"] =
                json{{"hvector", hvector_json(view.h_vector())}, {"annihilator", per_degree}};
            out.finish_text(text.str());
        } else if (*cmd_hess) {
            out.report["command"] = "hessian";
            const auto forms = parse_all();
            const Form& f = forms.front();
            const unsigned k = level_k < 0 ? 1 : static_cast<unsigned>(level_k);
            const HessianSpec spec = higher_hessian(f, k);
            const VanishingVerdict v = vanishing_verdict(spec.entries, {seed});
            std::ostringstream text;
            text << "form: " << f.str() << "\n";
            text << "order: " << k << ", size: " << spec.entries.size() << "\n";
            json rows = json::array();
            for (const auto& row : spec.entries) {
                json jr = json::array();
                for (const auto& e : row) {
                    jr.push_back(e.str());
                    text << "[" << e.str() << "] ";
                }
                text << "\n";
                rows.push_back(jr);
            }
            text << "verdict: " << vanish_status_name(v.status) << "\n";
            json res{{"k", k},
                     {"entries", rows},
                     {"verdict", vanish_status_name(v.status)},
                     {"trials", v.trials}};
            if (v.witness) {
                json p = json::array();
                for (const auto& c : *v.witness) p.push_back(rat_str(c));
                res["witness"] = p;
            }
            out.report["results"] = res;
            out.finish_text(text.str());
        } else if (*cmd_wlp || *cmd_slp) {
            const bool weak = cmd_wlp->parsed();
            out.report["command"] = weak ? "wlp" : "slp";
            out.report["trials"] = trials;
            const auto forms = parse_all();
            std::ostringstream text;
            json results = json::array();
            for (const auto& f : forms) {
                const HilbertVector h = hilbert_vector(f);
                json verdicts = json::object();
                text << "form: " << f.str() << "\n";
                text << "h-vector: " << hvector_text(h) << "\n";
                if (weak) {
                    const WlpVerdict w = wlp_verdict(f, trials, seed);
                    verdicts["wlp"] = wlp_json(w);
                    text << "wlp: " << verdict_status_name(w.status);
                    if (w.witness) text << "  witness: " << w.witness->str();
                    if (!w.certificate.empty()) text << "  (" << w.certificate << ")";
                    text << "\n";
                } else {
                    const SlpVerdict s = slp_verdict(f, seed);
                    verdicts["slp"] = slp_json(s);
                    text << "slp: " << verdict_status_name(s.status);
                    if (s.failing_k) text << "  failing k=" << *s.failing_k;
                    text << "\n";
                }
                results.push_back(json{{"hvector", hvector_json(h)}, {"verdicts", verdicts}});
            }
            out.report["results"] = forms.size() == 1 ? results[0] : results;
            out.finish_text(text.str());
        } else if (*cmd_waring) {
            out.report["command"] = "waring";
            const auto bvars = split_list(bvars_csv);
            if (bvars.size() != 2) throw InvalidInput("--bvars needs exactly two names");
            const Form f = parse_form(form, bvars);
            const BinaryForm h = BinaryForm::from_form(f, 0, 1);
            out.report["vars"] = bvars;
            out.report["form"] = f.str();
            const long br = border_rank(h);
            const WaringDecomposition dec = sylvester_decompose(h);
            std::ostringstream text;
            text << "form: " << f.str() << "\n";
            text << "border rank: " << br << "\n";
            text << "decomposition (kernel degree " << dec.kernel_degree << "):\n"
                 << dec.str() << "\n";
            out.report["results"] =
                json{{"border_rank", br}, {"decomposition", decomposition_json(dec)}};
            out.finish_text(text.str());
        } else if (*cmd_cat) {
            out.report["command"] = "catalecticant";
            const auto bvars = split_list(bvars_csv);
            if (bvars.size() != 2) throw InvalidInput("--bvars needs exactly two names");
            const Form f = parse_form(form, bvars);
            const BinaryForm h = BinaryForm::from_form(f, 0, 1);
            out.report["vars"] = bvars;
            out.report["form"] = f.str();
            const unsigned k = level_k < 0 ? h.t / 2 : static_cast<unsigned>(level_k);
            const QMatrix cat = cat_matrix(h, k);
            std::ostringstream text;
            text << "form: " << f.str() << "\n";
            text << "Cat_" << k << " (" << cat.rows() << "x" << cat.cols() << "), rank "
                 << rank(cat) << ":\n"
                 << cat.str();
            text << "border rank: " << border_rank(h) << "\n";
            json res{{"k", k},
                     {"matrices", json{{"cat", matrix_json(cat)}}},
                     {"rank", rank(cat)},
                     {"border_rank", border_rank(h)}};
            try {
                const SecantPosition pos = classify_secant_position(h);
                res["position"] = secant_position_name(pos);
                text << "position: " << secant_position_name(pos) << "\n";
            } catch (const DegreeTooSmall&) {
            }
            out.report["results"] = res;
            out.finish_text(text.str());
        } else if (cmd_pb->parsed() || cmd_pblocks->parsed() || cmd_pc->parsed()) {
            const PerazzoForm f =
                perazzo_from_options(p0_text, p1_text, p2_text, g_text, bvars_csv);
            out.report["vars"] = PerazzoForm::var_names();
            out.report["form"] = f.assembled.str();
            std::ostringstream text;
            text << "assembled: " << f.assembled.str() << "\n";
            if (cmd_pb->parsed()) {
                out.report["command"] = "perazzo build";
                const HilbertVector h = perazzo_hilbert(f);
                text << "degree: " << f.d << "\n";
                text << "h-vector: " << hvector_text(h) << "\n";
                out.report["results"] = json{{"degree", f.d}, {"hvector", hvector_json(h)}};
            } else if (cmd_pblocks->parsed()) {
                out.report["command"] = "perazzo blocks";
                const unsigned k = static_cast<unsigned>(level_k);
                const BlockMatrices bm = block_matrices(f, k);
                text << "M_" << k << " (rank " << rank(bm.M) << "):\n" << bm.M.str();
                text << "N'_" << k << " (rank " << rank(bm.Nprime) << "):\n" << bm.Nprime.str();
                out.report["results"] =
                    json{{"k", k},
                         {"matrices", json{{"A", matrix_json(bm.A)}, {"B", matrix_json(bm.B)},
                                           {"C", matrix_json(bm.C)}, {"G", matrix_json(bm.G)},
                                           {"M", matrix_json(bm.M)}, {"N", matrix_json(bm.N)},
                                           {"Nprime", matrix_json(bm.Nprime)}}},
                         {"rank_M", rank(bm.M)},
                         {"rank_Nprime", rank(bm.Nprime)}};
            } else {
                out.report["command"] = "perazzo classify";
                const ExtremalResult res = classify_extremal(f);
                text << "h-vector: " << hvector_text(res.h) << "\n";
                text << "class: " << extremal_class_name(res.cls) << "\n";
                out.report["results"] = json{{"hvector", hvector_json(res.h)},
                                             {"class", extremal_class_name(res.cls)}};
            }
            out.finish_text(text.str());
        } else if (cmd_pm->parsed() || cmd_pmin->parsed()) {
            PerazzoForm f;
            if (cmd_pm->parsed()) {
                out.report["command"] = "perazzo maximal";
                f = maximal_example(degree_d);
            } else {
                out.report["command"] = "perazzo minimal";
                MinimalFamily fam = MinimalFamily::I;
                if (family_text == "II" || family_text == "2") fam = MinimalFamily::II;
                if (family_text == "III" || family_text == "3") fam = MinimalFamily::III;
                MinimalParams pars;
                const auto parts = split_list(params_csv);
                if (parts.size() > 0) pars.lambda = parse_rational(parts[0]);
                if (parts.size() > 1) pars.mu = parse_rational(parts[1]);
                if (parts.size() > 2) pars.a = parse_rational(parts[2]);
                if (parts.size() > 3) pars.b = parse_rational(parts[3]);
                if (parts.size() > 4) pars.c = parse_rational(parts[4]);
                f = minimal_family(fam, degree_d, pars);
            }
            const HilbertVector h = perazzo_hilbert(f);
            out.report["vars"] = PerazzoForm::var_names();
            out.report["form"] = f.assembled.str();
            out.report["results"] = json{{"degree", f.d}, {"hvector", hvector_json(h)}};
            std::ostringstream text;
            text << "assembled: " << f.assembled.str() << "\n";
            text << "h-vector: " << hvector_text(h) << "\n";
            out.finish_text(text.str());
        } else if (cmd_gr->parsed() || cmd_gs->parsed() || cmd_gi->parsed() || cmd_gc->parsed()) {
            const auto vars = split_list(vars_csv);
            const Form f = parse_form(form, vars);
            out.report["vars"] = vars;
            out.report["form"] = f.str();
            const auto rel = find_min_relation(f, max_rel_degree);
            std::ostringstream text;
            if (!rel) {
                out.report["command"] = "gn";
                out.report["results"] = json{{"relation", nullptr}, {"max_degree", max_rel_degree}};
                text << "no relation up to degree " << max_rel_degree << "\n";
                out.finish_text(text.str());
            } else if (cmd_gr->parsed()) {
                out.report["command"] = "gn relation";
                out.report["results"] = json{{"relation", rel->g.str()},
                                             {"degree", rel->degree},
                                             {"max_degree", max_rel_degree}};
                text << "relation: " << rel->g.str() << " (degree " << rel->degree << ")\n";
                out.finish_text(text.str());
            } else {
                const SelfVanishingSystem svs = build_svs(f, *rel);
                json comps = json::array();
                for (const auto& c : svs.h) comps.push_back(c.str());
                if (cmd_gs->parsed()) {
                    out.report["command"] = "gn svs";
                    out.report["results"] = json{{"relation", rel->g.str()}, {"system", comps}};
                    text << "relation: " << rel->g.str() << "\n";
                    for (const auto& c : svs.h) text << "  " << c.str() << "\n";
                    out.finish_text(text.str());
                } else if (cmd_gi->parsed()) {
                    out.report["command"] = "gn identity";
                    const bool ok = verify_gn_identity(f, svs);
                    out.report["results"] =
                        json{{"relation", rel->g.str()}, {"system", comps}, {"identity", ok}};
                    text << "identity holds: " << (ok ? "yes" : "no") << "\n";
                    out.finish_text(text.str());
                } else {
                    out.report["command"] = "gn cremona";
                    const CremonaReduction red = cremona_reduce(f, svs, pivot);
                    json fwd = json::array(), bwd = json::array();
                    for (const auto& n : red.forward.numerators) fwd.push_back(n.str());
                    for (const auto& n : red.backward.numerators) bwd.push_back(n.str());
                    out.report["results"] = json{{"pivot", pivot},
                                                 {"reduced", red.reduced.str()},
                                                 {"forward_numerators", fwd},
                                                 {"backward_numerators", bwd},
                                                 {"denominator", red.forward.denominator.str()}};
                    text << "reduced: " << red.reduced.str() << "\n";
                    text << "denominator: " << red.forward.denominator.str() << "\n";
                    out.finish_text(text.str());
                }
            }
        } else if (cmd_so->parsed() || cmd_ss->parsed()) {
            const HilbertVector h = parse_hvector(hvec_csv);
            const bool o = cmd_so->parsed();
            out.report["command"] = o ? "sequence o-check" : "sequence si-check";
            const bool ok = o ? is_O_sequence(h) : is_SI_sequence(h);
            out.report["results"] = json{{"hvector", hvector_json(h)}, {"ok", ok}};
            std::ostringstream text;
            text << hvector_text(h) << (ok ? " : yes\n" : " : no\n");
            out.finish_text(text.str());
        } else if (cmd_se->parsed()) {
            out.report["command"] = "sequence expand";
            const auto expansion = sth_expansion(expand_m, expand_s);
            const long long bracket = m_bracket(expand_m, expand_s);
            json terms = json::array();
            std::ostringstream text;
            text << expand_m << " =";
            for (size_t i = 0; i < expansion.size(); ++i) {
                terms.push_back(json{{"top", expansion[i].first}, {"bottom", expansion[i].second}});
                text << (i ? " + C(" : " C(") << expansion[i].first << "," << expansion[i].second
                     << ")";
            }
            text << "\nbracket: " << bracket << "\n";
            out.report["results"] = json{{"m", expand_m}, {"s", expand_s}, {"expansion", terms},
                                         {"bracket", bracket}};
            out.finish_text(text.str());
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "[timing] " << elapsed.count() << " ms\n";
    return rc;
}
