#pragma once

#include <vector>

#include "thetawb/heisenberg.hpp"
#include "thetawb/poly.hpp"

namespace thetawb {

/// Exact basis of the degree-n forms fixed by every generator.
///
/// Each Heisenberg element sends a monomial to a rational multiple of another
/// monomial, so the fixed space splits along monomial orbits: an orbit whose
/// propagated multipliers are consistent contributes its weighted orbit sum,
/// an inconsistent one contributes nothing. Basis elements are ordered by the
/// smallest monomial of their orbit and scaled so that monomial has
/// coefficient 1. With no generators this is the monomial basis.
std::vector<RatPoly> invariant_subspace(const std::vector<HeisElem>& generators, int n, int g);

/// True iff x . p == p for every generator.
bool is_invariant(const RatPoly& p, const std::vector<HeisElem>& generators);

}  // namespace thetawb
