#pragma once

#include <vector>

#include "ngc/graphenc.hpp"
#include "ngc/multivector.hpp"

namespace ngc {

enum class EvalMode { Plain, Skew, Sym };

/// The morphism phi from (micro-)graphs to multivectors: one permutation of
/// (1..d) per Levi-Civita vertex, sign the product of permutation parities,
/// edges acting as total derivatives on the target's content (Euler field at
/// the sink, rho at LC vertices, a^k at Casimir vertices).
Multivector evaluate(const MicroGraph& g);

/// phi^- / phi^+ in 4D: (phi(g) -/+ phi(swap_casimirs(g))) / 2.
Multivector evaluate_skew(const MicroGraph& g);
Multivector evaluate_sym(const MicroGraph& g);

Multivector evaluate_mode(const MicroGraph& g, EvalMode mode);

/// sum_i coeffs[i] * phi(graphs[i]) in the given mode.
Multivector evaluate_combination(const std::vector<Rat>& coeffs,
                                 const std::vector<MicroGraph>& graphs,
                                 EvalMode mode = EvalMode::Plain);

/// Ring sized for evaluating g and taking one further Schouten bracket.
JetRing ring_for(const MicroGraph& g);

}  // namespace ngc
