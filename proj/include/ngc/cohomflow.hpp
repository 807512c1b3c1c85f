#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngc/evalmorphism.hpp"
#include "ngc/linsolve.hpp"
#include "ngc/nambu.hpp"

namespace ngc {

/// Outcome of one pipeline run over a graph family: a particular solution
/// of [[P, X]] = Q (or absence thereof), the homogeneous kernel basis, and
/// expressions of kernel representatives through Hamiltonian vector fields.
/// All coefficient lists are 0-based over the family they refer to.
struct PipelineResult {
    int dim = 2;
    std::string family;
    EvalMode mode = EvalMode::Plain;
    bool has_solution = false;
    Column solution;                               // over the family graphs
    std::vector<Column> kernel;                    // basis, over the family graphs
    std::vector<std::optional<Column>> ham_coeffs; // per kernel vector, over Hamiltonians
    double seconds = 0.0;

    std::string to_json_string() const;
};

/// Solve [[P, sum_i x_i phi(g_i)]] = Q^{gamma_3}(P) over the family.
PipelineResult solve_trivialization(int dim, const std::vector<MicroGraph>& family,
                                    EvalMode mode);

/// Basis of { x : [[P, sum x_i phi(g_i)]] = 0 } modulo { x : sum x_i phi(g_i) = 0 },
/// representatives lifted to family coefficients.
PipelineResult homogeneous_kernel(int dim, const std::vector<MicroGraph>& family,
                                  EvalMode mode);

/// For each kernel representative Y solve Y = sum_j c_j d_P(H_j); an
/// unexpected NoSolution is recorded as nullopt, never thrown.
PipelineResult express_in_hamiltonians(int dim, const PipelineResult& kernel,
                                       const std::vector<MicroGraph>& family,
                                       const std::vector<MicroGraph>& hams,
                                       EvalMode ham_mode);

/// Partition of the family under phi(g_i) = c * phi(g_j), c != 0. Scales
/// are relative to the first member of each class: for member k of a class
/// with first member f, phi(g_k) = scale_k * phi(g_f). Graphs with zero
/// image form one trailing class with scale 0.
struct SynonymClass {
    std::vector<int> members;  // 0-based positions in the family
    std::vector<Rat> scales;
};
std::vector<SynonymClass> detect_synonyms(const std::vector<MicroGraph>& family,
                                          EvalMode mode);

/// The 28 ordered pairs (i, j), 1-based over the 2D vector-graph family,
/// such that a combination of Gamma_i and Gamma_j alone trivializes the 2D
/// flow. Verified by re-solving each two-column system.
std::vector<std::pair<int, int>> trivializing_pairs_2d();

/// Yes/no/timeout table over descendants(Gamma_i) + descendants(Gamma_j)
/// in dimension 3 (plain) or 4 (skew).
struct PairTable {
    int dim = 3;
    std::vector<int> row_graphs;                   // {2, 4, 9, 11}
    std::vector<int> col_graphs;                   // {1, 5, 6, 7, 8, 12, 13}
    std::vector<std::vector<std::string>> cells;   // "yes" | "no" | "timeout"

    std::string to_csv() const;
    std::string to_json_string() const;
};
PairTable pair_search_table(int dim, double cell_budget_seconds = -1.0);

}  // namespace ngc
