#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ngc/evalmorphism.hpp"
#include "ngc/fixtures.hpp"
#include "ngc/linsolve.hpp"
#include "ngc/nambu.hpp"

using namespace ngc;

namespace {

std::mt19937 rng(20240917);

JetVar random_jetvar(int dim) {
    std::uniform_int_distribution<int> field(0, dim - 2);  // rho or a^k
    std::uniform_int_distribution<int> order(0, 2);
    std::uniform_int_distribution<int> coord(1, dim);
    JetVar v = field(rng) == 0 ? JetVar::rho() : JetVar::casimir(field(rng) % (dim - 1) + 1);
    int n = order(rng);
    for (int i = 0; i < n; ++i) v = v.bumped(coord(rng));
    return v;
}

DiffPolynomial random_poly(int dim) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> nfac(1, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    DiffPolynomial p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<JetVar> factors;
        int f = nfac(rng);
        for (int j = 0; j < f; ++j) factors.push_back(random_jetvar(dim));
        int c = coeff(rng);
        if (c != 0) p.add_term(Monomial(factors), Rat(c));
    }
    return p;
}

Multivector random_multivector(int dim, int degree) {
    Multivector m(dim);
    for (int attempt = 0; attempt < 2; ++attempt) {
        // Random ascending xi word of the requested size.
        std::vector<int> idxs(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) idxs[static_cast<size_t>(i)] = i;
        std::shuffle(idxs.begin(), idxs.end(), rng);
        XiWord w = 0;
        for (int i = 0; i < degree; ++i) w |= static_cast<XiWord>(1u << idxs[static_cast<size_t>(i)]);
        m.add_component(w, random_poly(dim));
    }
    return m;
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("randomized graded antisymmetry of the schouten bracket") {
    for (int dim : {2, 3}) {
        JetRing ring{dim, 12};
        for (int trial = 0; trial < 8; ++trial) {
            int p = trial % (dim + 1), q = (trial / 2) % (dim + 1);
            Multivector a = random_multivector(dim, p);
            Multivector b = random_multivector(dim, q);
            Multivector lhs = schouten_bracket(a, b, ring);
            Multivector rhs = schouten_bracket(b, a, ring);
            CHECK(lhs == Rat(-sign_pow((p - 1) * (q - 1))) * rhs);
        }
    }
}

TEST_CASE("randomized graded jacobi identity") {
    for (int dim : {2, 3}) {
        JetRing ring{dim, 14};
        for (int trial = 0; trial < 5; ++trial) {
            int p = 1 + trial % 2, q = 1 + (trial / 2) % 2, r = 1;
            Multivector a = random_multivector(dim, p);
            Multivector b = random_multivector(dim, q);
            Multivector c = random_multivector(dim, r);
            // (-1)^{(p-1)(r-1)} [[a,[[b,c]]]] + cyclic = 0.
            Multivector j1 = schouten_bracket(a, schouten_bracket(b, c, ring), ring);
            Multivector j2 = schouten_bracket(b, schouten_bracket(c, a, ring), ring);
            Multivector j3 = schouten_bracket(c, schouten_bracket(a, b, ring), ring);
            Multivector sum = Rat(sign_pow((p - 1) * (r - 1))) * j1 +
                              Rat(sign_pow((q - 1) * (p - 1))) * j2 +
                              Rat(sign_pow((r - 1) * (q - 1))) * j3;
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("d_P squares to zero on all Hamiltonian fixtures, d = 2 and 3") {
    {
        JetRing ring{2, 12};
        Multivector H = evaluate(parse_encoding(fixtures::hamiltonian_graph_2d(), 2, false));
        CHECK(lichnerowicz(lichnerowicz(H, ring), ring).is_zero());
    }
    JetRing ring{3, 12};
    for (const auto& e : fixtures::hamiltonian_graphs_3d()) {
        Multivector H = evaluate(parse_encoding(e, 3, false));
        CHECK(lichnerowicz(lichnerowicz(H, ring), ring).is_zero());
    }
}

TEST_CASE("total derivatives commute on random polynomials") {
    for (int dim : {2, 3, 4}) {
        JetRing ring{dim, 12};
        for (int trial = 0; trial < 10; ++trial) {
            DiffPolynomial p = random_poly(dim);
            for (int a = 1; a <= dim; ++a)
                for (int b = a + 1; b <= dim; ++b)
                    CHECK(total_derivative(total_derivative(p, a, ring), b, ring) ==
                          total_derivative(total_derivative(p, b, ring), a, ring));
        }
    }
}

TEST_CASE("evaluation is invariant under random relabelings, up to canonical sign") {
    std::uniform_int_distribution<int> pick(0, 13);
    const auto& encs = fixtures::vector_graphs_2d();
    for (int trial = 0; trial < 10; ++trial) {
        MicroGraph g = parse_encoding(encs[static_cast<size_t>(pick(rng))], 2, true);
        // Random relabeling of the Levi-Civita vertices plus random edge swaps.
        std::vector<int> perm{1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        MicroGraph h = g;
        for (int j = 0; j < g.n_lc; ++j) {
            for (int& t : h.targets[static_cast<size_t>(j)])
                if (t >= 1) t = perm[static_cast<size_t>(t - 1)];
        }
        std::vector<std::vector<int>> rows(static_cast<size_t>(g.n_lc));
        for (int j = 0; j < g.n_lc; ++j)
            rows[static_cast<size_t>(perm[static_cast<size_t>(j)] - 1)] =
                h.targets[static_cast<size_t>(j)];
        h.targets = rows;
        int flips = 0;
        for (auto& row : h.targets)
            if (rng() % 2) {
                std::swap(row[0], row[1]);
                ++flips;
            }
        CanonicalForm cg = canonical_form(g), ch = canonical_form(h);
        CHECK(cg.encoding == ch.encoding);
        CHECK(Rat(cg.sign) * evaluate(parse_encoding(cg.encoding, 2, true)) == evaluate(g));
        CHECK(evaluate(h) == Rat(sign_pow(flips)) * evaluate(g));
    }
}

TEST_CASE("solver invariants on random sparse systems") {
    std::uniform_int_distribution<int> val(-5, 5);
    auto frac = [](int n, int d) {
        Rat r(n, d);
        r.canonicalize();
        return r;
    };
    for (int trial = 0; trial < 15; ++trial) {
        int rows = 6, cols = 5;
        SparseRationalMatrix M(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (val(rng) > 2) M.set(r, c, frac(val(rng), 1 + (trial % 3)));
        CHECK(rank(M) + nullity(M) == cols);
        Column x0(static_cast<size_t>(cols));
        for (auto& v : x0) v = frac(val(rng), 2);
        Column b = M.multiply(x0);
        auto x = solve_particular(M, b);
        REQUIRE(x);
        CHECK(M.multiply(*x) == b);
        for (const auto& k : kernel_basis(M)) {
            Column mk = M.multiply(k);
            for (const auto& v : mk) CHECK(v == 0);
        }
    }
}
