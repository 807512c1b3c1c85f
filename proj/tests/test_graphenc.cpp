#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ngc/fixtures.hpp"
#include "ngc/graphenc.hpp"

using namespace ngc;

TEST_CASE("parse/serialize round-trips") {
    for (const char* enc : {"[0,3;2,3;2,3]", "[0,1;1,2;1,3]"}) {
        MicroGraph g = parse_encoding(enc, 2, true);
        CHECK(serialize_encoding(g) == enc);
    }
    MicroGraph h = parse_encoding("[1,2,3;1,2,4]", 3, false);
    CHECK(serialize_encoding(h) == "[1,2,3;1,2,4]");
    CHECK(h.n_lc == 2);
    CHECK(h.n_species() == 1);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_encoding("bogus", 2, true), ParseError);
    CHECK_THROWS_AS(parse_encoding("[0,3;2,3]", 2, true), StructureError);   // 2 rows, target 3
    CHECK_THROWS_AS(parse_encoding("[0;1]", 2, true), ParseError);           // wrong arity
    CHECK_THROWS_AS(parse_encoding("[0,9;2,3;2,3]", 2, true), StructureError);  // target range
    // In 3D every Levi-Civita vertex must reach its own Casimir vertex.
    CHECK_THROWS_AS(parse_encoding("[1,2,4;1,2,4]", 3, false), StructureError);
}

TEST_CASE("vertex id layout") {
    MicroGraph g = parse_encoding("[1,2,3;1,2,4]", 3, false);
    CHECK(g.casimir_id(1, 1) == 3);
    CHECK(g.casimir_id(2, 1) == 4);
    CHECK(g.casimir_owner(3) == std::pair<int, int>{1, 1});
    CHECK(g.max_vertex_id() == 4);
    MicroGraph k = parse_encoding("[1,3,5,6;1,4,5,6]", 4, false);
    CHECK(k.casimir_id(1, 2) == 5);
    CHECK(k.casimir_owner(6) == std::pair<int, int>{2, 2});
}

TEST_CASE("canonical form identifies relabelings with signs") {
    // Swapping the two free edges of one vertex flips the sign.
    MicroGraph g = parse_encoding("[0,3;2,3;1,2]", 2, true);
    MicroGraph s = g;
    std::swap(s.targets[2][0], s.targets[2][1]);
    CanonicalForm cf = canonical_form(g), cs = canonical_form(s);
    CHECK(cf.encoding == cs.encoding);
    CHECK(cf.sign == -cs.sign);
    // Relabeling Levi-Civita vertices is sign-free.
    MicroGraph r = parse_encoding("[0,2;1,3;3,2]", 2, true);  // g with 2<->3 renamed
    CHECK(canonical_form(r).encoding == cf.encoding);
}

TEST_CASE("generator reproduces the 14 2D vector graphs") {
    auto gen = generate_2d_vector_graphs();
    CHECK(gen.size() == 14);
    std::set<std::string> canon;
    for (const auto& e : fixtures::vector_graphs_2d())
        canon.insert(canonical_form(parse_encoding(e, 2, true)).encoding);
    CHECK(canon.size() == 14);
    for (const auto& g : gen) CHECK(canon.count(serialize_encoding(g)) == 1);
}

TEST_CASE("descendants of the example graph") {
    // The four raw 3D descendant encodings of the two-vertex Hamiltonian
    // graph contain one isomorphic pair ([1,2,3;3,2,4] and [1,4,3;1,2,4]
    // trade a Casimir between the two structures), so three classes remain.
    MicroGraph g = parse_encoding("[1,2;1,2]", 2, false);
    auto ds = descendants(g, 3);
    CHECK(ds.size() == 3);
    std::set<std::string> got;
    for (const auto& d : ds) got.insert(serialize_encoding(d));
    std::set<std::string> expected;
    for (const char* e : {"[1,2,3;1,2,4]", "[1,2,3;3,2,4]", "[1,4,3;1,2,4]", "[1,4,3;3,2,4]"})
        expected.insert(canonical_form(parse_encoding(e, 3, false)).encoding);
    CHECK(expected.size() == 3);
    CHECK(got == expected);
}

TEST_CASE("3D descendants of the trivializing pair") {
    const auto& encs = fixtures::vector_graphs_2d();
    MicroGraph g11 = parse_encoding(encs[10], 2, true);
    MicroGraph g12 = parse_encoding(encs[11], 2, true);
    auto d11 = descendants(g11, 3);
    auto d12 = descendants(g12, 3);
    CHECK(d11.size() == 10);
    CHECK(d12.size() == 31);
    auto all = d11;
    all.insert(all.end(), d12.begin(), d12.end());
    CHECK(dedup_isomorphic(all).size() == 41);
    // All named 3D graphs occur among the descendants.
    std::set<std::string> fam;
    for (const auto& g : dedup_isomorphic(all)) fam.insert(serialize_encoding(g));
    for (const auto& [idx, enc] : fixtures::named_graphs_3d())
        CHECK(fam.count(canonical_form(parse_encoding(enc, 3, true)).encoding) == 1);
}

TEST_CASE("embedding adds one Casimir per structure, new edge last") {
    MicroGraph g = parse_encoding("[1,2;1,2]", 2, false);
    MicroGraph e = embed(g);
    CHECK(e.dim == 3);
    CHECK(serialize_encoding(e) == "[1,2,3;1,2,4]");
}

TEST_CASE("casimir swap in 4D") {
    MicroGraph g = parse_encoding("[1,3,5,6;1,4,5,6]", 4, false);
    MicroGraph s = swap_casimirs(g);
    CHECK(s.dim == 4);
    CHECK(canonical_form(swap_casimirs(s)).encoding == canonical_form(g).encoding);
    // The swap exchanges species: contents at positions of a^1 and a^2 trade.
    CHECK(serialize_encoding(s) != serialize_encoding(g));
}

TEST_CASE("hamiltonian micro-graph generator covers the named families") {
    auto h3 = generate_hamiltonian_micrographs(3);
    std::set<std::string> canon3;
    for (const auto& g : h3) canon3.insert(serialize_encoding(g));
    for (const auto& e : fixtures::hamiltonian_graphs_3d())
        CHECK(canon3.count(canonical_form(parse_encoding(e, 3, false)).encoding) == 1);
    // The seven named Hamiltonian graphs contain one isomorphic pair
    // (H_4 and H_7), leaving six classes.
    CHECK(h3.size() == 6);
}
