#pragma once

#include <cstdint>

#include "ribbon/laurent.hpp"
#include "ribbon/pd.hpp"

namespace ribbon {

/// The Kauffman bracket loop weight, delta = -A^2 - A^-2.
LaurentPolynomial bracket_delta();

/// Kauffman bracket <pd> of a closed diagram, exact in A. Production path:
/// crossings are contracted in a greedy adjacency order so the number of open
/// strand fragments stays small; equal to the 2^n state sum.
LaurentPolynomial kauffman_bracket(const PlanarDiagram& pd);

/// Kauffman bracket by full state enumeration, parallelized over disjoint
/// state blocks (OpenMP when available). Exact; kept as an independently
/// evaluated kernel and for benchmarking against the contraction path.
LaurentPolynomial bracket_state_sum(const PlanarDiagram& pd);

namespace reference {
/// Serial brute-force bracket: enumerates every state with its own loop
/// counting and accumulation. Test oracle; shares no smoothing or ordering
/// code with the production paths above.
LaurentPolynomial bracket_brute_force(const PlanarDiagram& pd);
}  // namespace reference

/// Signed crossing count under the inferred orientation. The sign rule
/// (over strand l->j is +1) is calibrated so the standard left-handed
/// trefoil diagram X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3} has writhe -3.
int writhe(const PlanarDiagram& pd);

/// Jones polynomial V = (-A)^{-3w} <pd> with A = t^{-1/4}, exact on the
/// t^{1/2} grid (integer t powers for knots).
LaurentPolynomial jones(const PlanarDiagram& pd);

/// Alexander polynomial of a knot diagram from the crossing relations over
/// its over-strand arcs, normalized to the symmetric Laurent form with
/// positive leading coefficient (so Delta(t) = Delta(1/t), Delta(1) = +-1).
LaurentPolynomial alexander(const PlanarDiagram& pd);

/// |Delta(-1)|.
std::int64_t determinant(const PlanarDiagram& pd);

}  // namespace ribbon
