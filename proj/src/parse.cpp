#include "lefschetz/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

std::string strip_space(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool looks_rational(const std::string& piece) {
    if (piece.empty()) return false;
    for (char c : piece)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-') return false;
    return true;
}

}  // namespace

Form parse_form(const std::string& text, const std::vector<std::string>& variables) {
    const std::string s = strip_space(text);
    if (s.empty()) throw ParseError("empty form");

    std::map<std::string, size_t> var_index;
    for (size_t i = 0; i < variables.size(); ++i) {
        if (!var_index.emplace(variables[i], i).second)
            throw ParseError("duplicate variable '" + variables[i] + "'");
    }

    // split into signed terms
    struct RawTerm {
        bool negative;
        std::string body;
    };
    std::vector<RawTerm> raw;
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string body;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c == '+' || c == '-') {
            if (body.empty()) throw ParseError("empty term in '" + text + "'");
            raw.push_back({neg, body});
            body.clear();
            neg = c == '-';
        } else {
            body.push_back(c);
        }
    }
    if (body.empty()) throw ParseError("trailing sign in '" + text + "'");
    raw.push_back({neg, body});

    Form::TermMap terms;
    std::optional<unsigned> seen_degree;
    for (const auto& rt : raw) {
        Rational coeff(1);
        Monomial m(variables.size());
        // *-separated factors: rationals multiply the coefficient, var^e
        // pieces raise exponents
        size_t start = 0;
        while (start <= rt.body.size()) {
            size_t stop = rt.body.find('*', start);
            const std::string piece =
                rt.body.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
            if (piece.empty()) throw ParseError("empty factor in term '" + rt.body + "'");
            if (looks_rational(piece)) {
                coeff *= parse_rational(piece);
            } else {
                const size_t caret = piece.find('^');
                const std::string name = piece.substr(0, caret);
                unsigned exp = 1;
                if (caret != std::string::npos) {
                    const std::string etxt = piece.substr(caret + 1);
                    if (etxt.empty()) throw ParseError("missing exponent in '" + piece + "'");
                    for (char c : etxt)
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            throw ParseError("bad exponent in '" + piece + "'");
                    exp = static_cast<unsigned>(std::stoul(etxt));
                }
                auto it = var_index.find(name);
                if (it == var_index.end()) throw ParseError("unknown variable '" + name + "'");
                m.e[it->second] += exp;
            }
            if (stop == std::string::npos) break;
            start = stop + 1;
        }
        if (rt.negative) coeff = -coeff;
        if (coeff == 0) continue;
        const unsigned d = m.degree();
        if (seen_degree && *seen_degree != d)
            throw NotHomogeneous("monomials of degree " + std::to_string(*seen_degree) + " and " +
                                 std::to_string(d) + " in '" + text + "'");
        if (!seen_degree) seen_degree = d;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }
    return Form::from_terms(variables, terms);
}

std::vector<std::string> operator_names(const std::vector<std::string>& variables) {
    std::vector<std::string> out;
    out.reserve(variables.size());
    for (const auto& v : variables) {
        if (v.size() == 1 && std::islower(static_cast<unsigned char>(v[0]))) {
            out.push_back(std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(v[0])))));
        } else if (v.size() >= 2 && v[0] == 'x' &&
                   std::all_of(v.begin() + 1, v.end(),
                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            out.push_back("y" + v.substr(1));
        } else {
            out.push_back("D" + v);
        }
    }
    return out;
}

}  // namespace lefschetz
