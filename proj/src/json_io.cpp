#include "ngc/json_io.hpp"

#include "ngc/errors.hpp"

namespace ngc {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    r.canonicalize();
    return r;
}

JetVar jetvar_from_string(const std::string& s, int dim) {
    auto coord_of = [](char c) {
        switch (c) {
            case 'x': return 1;
            case 'y': return 2;
            case 'z': return 3;
            case 'w': return 4;
        }
        throw ParseError(std::string("bad coordinate letter: ") + c);
    };
    if (s.size() == 1 && s.find_first_of("xyzw") == 0) return JetVar::base(coord_of(s[0]));

    size_t us = s.find('_');
    std::string head = s.substr(0, us);
    JetVar v;
    if (head == "rho")
        v = JetVar::rho();
    else if (head.size() == 2 && head[0] == 'a' && isdigit(head[1]))
        v = JetVar::casimir(head[1] - '0');
    else
        throw ParseError("bad jet variable: " + s);
    if (us != std::string::npos)
        for (char c : s.substr(us + 1)) v = v.bumped(coord_of(c));
    (void)dim;
    return v;
}

json multivector_to_json(const Multivector& v) {
    json comps = json::array();
    for (const auto& [w, p] : v.components()) {
        json terms = json::array();
        for (const auto& [m, c] : p.terms()) {
            json factors = json::array();
            for (JetVar f : m.factors()) factors.push_back(f.display(v.dim()));
            terms.push_back({{"monomial", factors}, {"coeff", rat_to_string(c)}});
        }
        comps.push_back({{"xi_indices", word_indices(w)}, {"terms", terms}});
    }
    return {{"dim", v.dim()}, {"components", comps}};
}

Multivector multivector_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    Multivector v(dim);
    for (const auto& comp : j.at("components")) {
        XiWord w = 0;
        for (int i : comp.at("xi_indices")) w |= static_cast<XiWord>(1u << (i - 1));
        DiffPolynomial p;
        for (const auto& term : comp.at("terms")) {
            std::vector<JetVar> factors;
            for (const auto& f : term.at("monomial"))
                factors.push_back(jetvar_from_string(f.get<std::string>(), dim));
            p.add_term(Monomial(std::move(factors)),
                       rat_from_string(term.at("coeff").get<std::string>()));
        }
        v.set_component(w, p);
    }
    return v;
}

}  // namespace ngc
