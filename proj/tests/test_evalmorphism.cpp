#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ngc/evalmorphism.hpp"
#include "ngc/fixtures.hpp"

using namespace ngc;

namespace {

DiffPolynomial v(JetVar j) { return DiffPolynomial::variable(j); }

JetVar rho_d(std::initializer_list<int> coords) {
    JetVar r = JetVar::rho();
    for (int c : coords) r = r.bumped(c);
    return r;
}

}  // namespace

TEST_CASE("the first 2D vector graph evaluates to the reference formula") {
    // graph 1 : (-rho_y*rho_xy^2 + rho_y*rho_xx*rho_yy)*xi0
    //         + (rho_x*rho_xy^2 - rho_x*rho_xx*rho_yy)*xi1
    Multivector m = evaluate(parse_encoding(fixtures::vector_graphs_2d()[0], 2, true));
    DiffPolynomial c0 = Rat(-1) * v(rho_d({2})) * v(rho_d({1, 2})) * v(rho_d({1, 2})) +
                        v(rho_d({2})) * v(rho_d({1, 1})) * v(rho_d({2, 2}));
    DiffPolynomial c1 = v(rho_d({1})) * v(rho_d({1, 2})) * v(rho_d({1, 2})) -
                        v(rho_d({1})) * v(rho_d({1, 1})) * v(rho_d({2, 2}));
    CHECK(m.component(0b01) == c0);
    CHECK(m.component(0b10) == c1);
}

TEST_CASE("the kernel graph evaluates to the reference formula") {
    // graph 3 : rho*(rho_yy*rho_xxy - 2*rho_xy*rho_xyy + rho_xx*rho_yyy)*xi0 - ...
    Multivector m = evaluate(parse_encoding("[0,3;2,3;2,3]", 2, true));
    DiffPolynomial c0 = v(JetVar::rho()) * (v(rho_d({2, 2})) * v(rho_d({1, 1, 2})) -
                                            Rat(2) * v(rho_d({1, 2})) * v(rho_d({1, 2, 2})) +
                                            v(rho_d({1, 1})) * v(rho_d({2, 2, 2})));
    CHECK(m.component(0b01) == c0);
}

TEST_CASE("the 2D Hamiltonian graph evaluates to 2(rho_xx rho_yy - rho_xy^2)") {
    Multivector m = evaluate(parse_encoding("[1,2;1,2]", 2, false));
    CHECK(m.degree() == 0);
    DiffPolynomial h = Rat(2) * v(rho_d({1, 1})) * v(rho_d({2, 2})) -
                       Rat(2) * v(rho_d({1, 2})) * v(rho_d({1, 2}));
    CHECK(m.component(0) == h);
}

TEST_CASE("no 2D family graph evaluates to zero") {
    for (const auto& e : fixtures::vector_graphs_2d())
        CHECK_FALSE(evaluate(parse_encoding(e, 2, true)).is_zero());
}

TEST_CASE("the 2D synonym relations hold exactly") {
    std::vector<Multivector> phis;
    for (const auto& e : fixtures::vector_graphs_2d())
        phis.push_back(evaluate(parse_encoding(e, 2, true)));
    for (const auto& cls : fixtures::relation_classes_2d()) {
        const Multivector& rep = phis[static_cast<size_t>(cls.front().index - 1)];
        for (const auto& t : cls)
            CHECK(phis[static_cast<size_t>(t.index - 1)] == t.coeff * rep);
    }
}

TEST_CASE("evaluation is covariant under canonical form") {
    for (const char* enc : {"[0,3;2,3;1,2]", "[0,1;1,2;1,3]"}) {
        MicroGraph g = parse_encoding(enc, 2, true);
        MicroGraph s = g;
        std::swap(s.targets[1][0], s.targets[1][1]);  // edge swap: phi flips sign
        CHECK(evaluate(s) == Rat(-1) * evaluate(g));
        CanonicalForm cf = canonical_form(g);
        CHECK(evaluate(g) ==
              Rat(cf.sign) * evaluate(parse_encoding(cf.encoding, 2, true)));
    }
}

TEST_CASE("isomorphic micro-graphs evaluate equally up to the canonical sign") {
    const char* a = "[1,2,3;3,2,4]";
    const char* b = "[1,4,3;1,2,4]";
    CanonicalForm ca = canonical_form(parse_encoding(a, 3, false));
    CanonicalForm cb = canonical_form(parse_encoding(b, 3, false));
    REQUIRE(ca.encoding == cb.encoding);
    CHECK(Rat(ca.sign) * evaluate(parse_encoding(b, 3, false)) ==
          Rat(cb.sign) * evaluate(parse_encoding(a, 3, false)));
}

TEST_CASE("3D Hamiltonian synonym relations hold exactly") {
    std::vector<Multivector> hs;
    for (const auto& e : fixtures::hamiltonian_graphs_3d())
        hs.push_back(evaluate(parse_encoding(e, 3, false)));
    for (const auto& cls : fixtures::hamiltonian_relations_3d()) {
        const Multivector& rep = hs[static_cast<size_t>(cls.front().index - 1)];
        for (const auto& t : cls)
            CHECK(hs[static_cast<size_t>(t.index - 1)] == t.coeff * rep);
    }
}

TEST_CASE("4D: plain relations, vanishing H9, and the symmetrized basis") {
    std::vector<MicroGraph> graphs;
    for (const auto& e : fixtures::hamiltonian_graphs_4d())
        graphs.push_back(parse_encoding(e, 4, false));
    std::vector<Multivector> hs;
    for (const auto& g : graphs) hs.push_back(evaluate(g));
    for (const auto& cls : fixtures::hamiltonian_relations_4d()) {
        if (cls.size() == 1 && cls.front().coeff == 0) {
            CHECK(hs[static_cast<size_t>(cls.front().index - 1)].is_zero());
            continue;
        }
        const Multivector& rep = hs[static_cast<size_t>(cls.front().index - 1)];
        for (const auto& t : cls)
            CHECK(hs[static_cast<size_t>(t.index - 1)] == t.coeff * rep);
    }
}

TEST_CASE("skew and sym modes split the plain evaluation") {
    MicroGraph g = parse_encoding(fixtures::hamiltonian_graphs_4d()[0], 4, false);
    Multivector plain = evaluate(g);
    Multivector skew = evaluate_skew(g);
    Multivector sym = evaluate_sym(g);
    CHECK(skew + sym == plain);
    Multivector swapped = evaluate(swap_casimirs(g));
    CHECK(sym - skew == swapped);
}

TEST_CASE("combinations are evaluated linearly") {
    std::vector<MicroGraph> gs;
    for (const auto& e : fixtures::vector_graphs_2d()) gs.push_back(parse_encoding(e, 2, true));
    std::vector<Rat> coeffs(gs.size(), Rat(0));
    coeffs[0] = Rat(3);
    coeffs[4] = Rat(-1, 2);
    Multivector lhs = evaluate_combination(coeffs, gs);
    Multivector rhs = Rat(3) * evaluate(gs[0]) + Rat(-1, 2) * evaluate(gs[4]);
    CHECK(lhs == rhs);
}
