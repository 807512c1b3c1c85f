#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ngc/cohomflow.hpp"
#include "ngc/fixtures.hpp"
#include "ngc/tetraflow.hpp"

using namespace ngc;

namespace {

std::vector<MicroGraph> family_2d() {
    std::vector<MicroGraph> fam;
    for (const auto& e : fixtures::vector_graphs_2d()) fam.push_back(parse_encoding(e, 2, true));
    return fam;
}

}  // namespace

TEST_CASE("2D trivialization: solution and re-evaluation check") {
    auto fam = family_2d();
    PipelineResult r = solve_trivialization(2, fam, EvalMode::Plain);
    REQUIRE(r.has_solution);
    REQUIRE(r.solution.size() == 14);
    // The computed solution satisfies its defining equation exactly.
    JetRing ring{2, 12};
    Multivector X = evaluate_combination(r.solution, fam);
    CHECK(schouten_bracket(nambu_structure(2), X, ring) == tetrahedral_flow(2));
    // And it agrees with the named solution modulo synonyms: both evaluate
    // to the same vector field.
    std::vector<Rat> named(fam.size(), Rat(0));
    for (const auto& t : fixtures::trivializing_combination_2d_alt())
        named[static_cast<size_t>(t.index - 1)] = t.coeff;
    CHECK(evaluate_combination(named, fam) == X);
}

TEST_CASE("2D homogeneous kernel is one-dimensional, generated by the third graph") {
    auto fam = family_2d();
    PipelineResult r = homogeneous_kernel(2, fam, EvalMode::Plain);
    REQUIRE(r.kernel.size() == 1);
    Multivector Y = evaluate_combination(r.kernel[0], fam);
    JetRing ring{2, 12};
    CHECK(schouten_bracket(nambu_structure(2), Y, ring).is_zero());
    // The representative's image is a nonzero multiple of phi(Gamma_3).
    Multivector g3 = evaluate(fam[2]);
    CHECK_FALSE(Y.is_zero());
    CHECK(Y == g3);  // lifted representative is exactly the third column
}

TEST_CASE("2D kernel representative is half a Hamiltonian vector field") {
    auto fam = family_2d();
    PipelineResult k = homogeneous_kernel(2, fam, EvalMode::Plain);
    std::vector<MicroGraph> hams{parse_encoding(fixtures::hamiltonian_graph_2d(), 2, false)};
    PipelineResult r = express_in_hamiltonians(2, k, fam, hams, EvalMode::Plain);
    REQUIRE(r.ham_coeffs.size() == 1);
    REQUIRE(r.ham_coeffs[0]);
    CHECK(*r.ham_coeffs[0] == Column{Rat(1, 2)});
}

TEST_CASE("graphs whose bracket image vanishes are exactly {3, 10, 14}") {
    auto fam = family_2d();
    JetRing ring{2, 12};
    Multivector P = nambu_structure(2);
    std::set<int> zero;
    for (size_t i = 0; i < fam.size(); ++i)
        if (schouten_bracket(P, evaluate(fam[i]), ring).is_zero())
            zero.insert(static_cast<int>(i) + 1);
    CHECK(zero == std::set<int>{3, 10, 14});
}

TEST_CASE("synonym detection recovers the three 2D relation classes") {
    auto classes = detect_synonyms(family_2d(), EvalMode::Plain);
    REQUIRE(classes.size() == 3);
    for (const auto& expected : fixtures::relation_classes_2d()) {
        // Find the detected class holding the expected first member.
        auto it = std::find_if(classes.begin(), classes.end(), [&](const SynonymClass& c) {
            return std::find(c.members.begin(), c.members.end(), expected.front().index - 1) !=
                   c.members.end();
        });
        REQUIRE(it != classes.end());
        REQUIRE(it->members.size() == expected.size());
        for (const auto& t : expected) {
            auto pos = std::find(it->members.begin(), it->members.end(), t.index - 1);
            REQUIRE(pos != it->members.end());
            size_t j = static_cast<size_t>(pos - it->members.begin());
            CHECK(it->scales[j] == t.coeff);
        }
    }
}

TEST_CASE("all 28 two-graph trivializing pairs are found") {
    auto pairs = trivializing_pairs_2d();
    CHECK(pairs.size() == 28);
    // One pair per (row, column) combination.
    std::set<std::pair<int, int>> got(pairs.begin(), pairs.end());
    CHECK(got.size() == 28);
    for (int i : fixtures::pair_rows_2d())
        for (int j : fixtures::pair_columns_2d()) CHECK(got.count({i, j}) == 1);
    CHECK(got.count({11, 12}) == 1);  // the named solution pair
}

TEST_CASE("pair table rendering") {
    PairTable t;
    t.dim = 3;
    t.row_graphs = {2, 4};
    t.col_graphs = {1, 5};
    t.cells = {{"yes", "no"}, {"no", "timeout"}};
    CHECK(t.to_csv() == "pair,Gamma_1,Gamma_5\nGamma_2,yes,no\nGamma_4,no,timeout\n");
    auto j = t.to_json_string();
    CHECK(j.find("\"timeout\"") != std::string::npos);
}

TEST_CASE("pipeline results serialize to JSON with exact rationals") {
    auto fam = family_2d();
    PipelineResult k = homogeneous_kernel(2, fam, EvalMode::Plain);
    std::vector<MicroGraph> hams{parse_encoding(fixtures::hamiltonian_graph_2d(), 2, false)};
    PipelineResult r = express_in_hamiltonians(2, k, fam, hams, EvalMode::Plain);
    auto j = r.to_json_string();
    CHECK(j.find("\"1/2\"") != std::string::npos);
    CHECK(j.find("\"dim\": 2") != std::string::npos);
}

TEST_CASE("a tight budget makes every pair-table cell time out") {
    PairTable t = pair_search_table(3, 1e-9);
    for (const auto& row : t.cells)
        for (const auto& cell : row) CHECK(cell == "timeout");
}
