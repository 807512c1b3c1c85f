#pragma once

#include <utility>
#include <vector>

#include "ngc/multivector.hpp"

namespace ngc {

/// A directed graph on vertices 1..n with ordered edges.
struct DirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (source, target)
};

/// The complete graph on 4 vertices with its 6 edges in lexicographic order.
DirectedGraph tetrahedron_skeleton();

/// All 2^6 orientations of the tetrahedron with out-degree at most 2 at
/// every vertex (the orientations whose operation on bivectors is nonzero).
std::vector<DirectedGraph> oriented_tetrahedra();

/// The multidifferential operation of a directed graph: each edge (s, t)
/// contracts an odd derivative d/dxi_i on slot s with the total derivative
/// d/dx^i on slot t (summed over i), with Koszul signs; the slots are then
/// wedge-multiplied together.
Multivector graph_operation(const DirectedGraph& g,
                            const std::vector<Multivector>& args,
                            const JetRing& ring);

/// The tetrahedral flow Q(P) of the Nambu-determinant Poisson structure on
/// R^dim: the orientation sum applied to (P, P, P, P), normalized so that in
/// 2D it reproduces
///   (rho_y^3 rho_xxx - 3 rho_x rho_y^2 rho_xxy
///    + 3 rho_x^2 rho_y rho_xyy - rho_x^3 rho_yyy) xi1 xi2.
Multivector tetrahedral_flow(int dim);

}  // namespace ngc
