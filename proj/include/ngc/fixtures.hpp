#pragma once

#include <map>
#include <string>
#include <vector>

#include "ngc/graphenc.hpp"
#include "ngc/jetring.hpp"

/// Reference data for the trivialization problem of the tetrahedral flow of
/// Nambu-determinant Poisson bivectors in dimensions 2, 3 and 4: the graph
/// families the pipelines run over, the known solutions and kernel bases, and
/// the synonym relations among graph images.  All encodings use the scheme of
/// graphenc.hpp (sink 0, Levi-Civita vertices 1..n, then Casimir vertices).
namespace ngc::fixtures {

/// One summand index * coeff in a linear combination of graph images.
/// Indices are 1-based into the family the combination refers to.
struct Term {
    int index;
    Rat coeff;
};

using Combination = std::vector<Term>;

// --- dimension 2 -----------------------------------------------------------

/// The 14 nonisomorphic vector-field graphs on three Levi-Civita vertices
/// and one sink over R^2 (1-based order is shared with all data below).
const std::vector<std::string>& vector_graphs_2d();

/// Synonym classes among the images of the 14 graphs: each class lists
/// (index, c) with phi(Gamma_index) = c * phi(Gamma_first-of-class).
const std::vector<Combination>& relation_classes_2d();

/// Solution X with [[P, phi(X)]] = tetra flow (found by the linear solver).
const Combination& trivializing_combination_2d();
/// The same solution as usually written via synonyms: Gamma_11 + 2 Gamma_12.
const Combination& trivializing_combination_2d_alt();

/// Kernel generator: [[P, phi(Gamma_3)]] = 0.
const Combination& kernel_generator_2d();

/// Hamiltonian graph on two Levi-Civita vertices and no sink.
const std::string& hamiltonian_graph_2d();

// --- dimension 3 -----------------------------------------------------------

/// Encodings of the named members of the 41 nonisomorphic descendants
/// (of Gamma_11, Gamma_12) in dimension 3, keyed by their 1-based index.
const std::map<int, std::string>& named_graphs_3d();

/// Trivializing vector field over the 3D descendants.
const Combination& trivializing_combination_3d();

/// The three kernel generators Y_1, Y_2, Y_3 over the 3D descendants.
const std::vector<Combination>& kernel_combinations_3d();

/// The seven Hamiltonian micro-graphs in dimension 3 (1-based below).
const std::vector<std::string>& hamiltonian_graphs_3d();

/// Synonym classes among the 3D Hamiltonians (same convention as in 2D).
const std::vector<Combination>& hamiltonian_relations_3d();

/// Y_i as combinations of Hamiltonian vector fields d_P(H_j):
/// Y_1 = d_P(H_3), Y_2 = 1/4 d_P(H_1), Y_3 = 1/2 d_P(H_1) - d_P(H_2).
const std::vector<Combination>& kernel_in_hamiltonians_3d();

// --- dimension 4 -----------------------------------------------------------

/// Encodings of the named members of the 4D descendants, keyed by index.
const std::map<int, std::string>& named_graphs_4d();

/// The seven kernel generators Y^1..Y^7 (skew-symmetrized images).
const std::vector<Combination>& kernel_combinations_4d();

/// The 21 Hamiltonian micro-graphs in dimension 4.
const std::vector<std::string>& hamiltonian_graphs_4d();

/// Synonym relations among the (plain) 4D Hamiltonians; a class whose first
/// coefficient is zero asserts that the image itself vanishes.
const std::vector<Combination>& hamiltonian_relations_4d();

/// Indices of a maximal independent set among the symmetrized Hamiltonians.
const std::vector<int>& independent_hamiltonians_4d();

/// Y^i as combinations of symmetrized Hamiltonian vector fields.
const std::vector<Combination>& kernel_in_hamiltonians_4d();

// --- pair-search tables ----------------------------------------------------

/// Row indices i and column indices j of the pair tables: each pair
/// (Gamma_i, Gamma_j) trivializes the flow in dimension 2.
const std::vector<int>& pair_rows_2d();      // {2, 4, 9, 11}
const std::vector<int>& pair_columns_2d();   // {1, 5, 6, 7, 8, 12, 13}

/// (i, j) cells for which the descendants still admit a solution.
const std::vector<std::pair<int, int>>& solvable_pairs_3d();
const std::vector<std::pair<int, int>>& solvable_pairs_4d();

}  // namespace ngc::fixtures
