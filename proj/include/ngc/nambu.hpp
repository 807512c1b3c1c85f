#pragma once

#include "ngc/multivector.hpp"

namespace ngc {

/// The Nambu-determinant Poisson bivector on R^dim:
///   d=2:  P = rho xi1 xi2,
///   d=3:  P = rho sum eps^{ijk} (a^1)_k xi_i xi_j,
///   d=4:  P = rho sum eps^{ijkl} (a^1)_k (a^2)_l xi_i xi_j,
/// where (a^m)_k denotes the first derivative of the Casimir a^m along x^k
/// and the sums run over i < j.
Multivector nambu_structure(int dim);

/// The Lichnerowicz differential d_P(X) = [[P, X]] for the structure above.
Multivector lichnerowicz(const Multivector& x, const JetRing& ring);

/// [[P, P]] == 0 for the structure above (the Jacobi identity).
bool nambu_is_poisson(int dim, const JetRing& ring);

}  // namespace ngc
