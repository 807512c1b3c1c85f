#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ngc/errors.hpp"

namespace ngc {

/// A Nambu micro-graph (or plain 2D Kontsevich graph).
///
/// Vertex ids follow the paper's conventions: 0 is the sink when present,
/// the Levi-Civita vertices are 1..n_lc, and the Casimir vertex of species
/// k owned by LC vertex j has id n_lc + (k-1)*n_lc + j. Only LC vertices
/// emit edges: exactly dim ordered targets each. In dim >= 3 the last
/// dim-2 targets of each LC vertex are its own Casimir vertices (in species
/// order for generated graphs; a Casimir-swapped graph carries them in the
/// swapped order).
struct MicroGraph {
    int dim = 2;
    bool has_sink = false;
    int n_lc = 0;
    std::vector<std::vector<int>> targets;  // [n_lc][dim]

    int lc_id(int j) const { return j; }  // j = 1..n_lc
    int casimir_id(int j, int species) const { return n_lc + (species - 1) * n_lc + j; }
    int n_species() const { return dim - 2; }
    int max_vertex_id() const { return n_lc * (dim - 1); }
    bool is_lc(int id) const { return id >= 1 && id <= n_lc; }
    bool is_casimir(int id) const { return id > n_lc && id <= max_vertex_id(); }
    /// (owner, species) of a Casimir vertex id.
    std::pair<int, int> casimir_owner(int id) const {
        int off = id - n_lc - 1;
        return {off % n_lc + 1, off / n_lc + 1};
    }

    int in_degree(int id) const;
    int max_in_degree() const;

    friend bool operator==(const MicroGraph& a, const MicroGraph& b) {
        return a.dim == b.dim && a.has_sink == b.has_sink && a.targets == b.targets;
    }
    friend bool operator<(const MicroGraph& a, const MicroGraph& b) {
        return a.targets < b.targets;
    }
};

MicroGraph parse_encoding(const std::string& text, int dim, bool has_sink);
std::string serialize_encoding(const MicroGraph& g);

/// Minimum encoding over LC relabelings (Casimirs follow their owner,
/// species fixed) and per-vertex swaps of the two free edges; the sign is
/// the parity of free-edge transpositions used to reach the minimum.
struct CanonicalForm {
    std::string encoding;
    int sign = 1;  // phi(g) = sign * phi(parse(encoding))
};
CanonicalForm canonical_form(const MicroGraph& g);

/// All 2D Kontsevich 1-vector graphs on n_lc LC vertices and one sink:
/// exactly one edge into the sink, two distinct ordered targets per vertex,
/// deduplicated up to isomorphism. Deterministic order.
std::vector<MicroGraph> generate_2d_vector_graphs(int n_lc = 3);

/// All Nambu micro-graphs on two LC vertices and no sink (the Hamiltonian
/// family), d in {2,3,4}.
std::vector<MicroGraph> generate_hamiltonian_micrographs(int dim);

/// d-dimensional descendants of a 2D graph: add d-2 Casimir vertices per
/// structure and redirect each free edge with an LC target over the target
/// structure's vertices, dropping double edges, dedup up to isomorphism.
std::vector<MicroGraph> descendants(const MicroGraph& g, int dim);

/// The embedding into dim+1: one new Casimir per LC vertex, new edge last.
MicroGraph embed(const MicroGraph& g);

/// Exchange the a^1 and a^2 Casimir vertices of each structure (4D only).
MicroGraph swap_casimirs(const MicroGraph& g);

/// Canonical-form dedup of a list; returns canonical representatives in
/// sorted encoding order.
std::vector<MicroGraph> dedup_isomorphic(const std::vector<MicroGraph>& gs);

}  // namespace ngc
