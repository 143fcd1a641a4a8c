// Heisenberg-invariant quartics, K-invariant cubics and the restriction of
// cubics to eigenspaces of elements of the level subgroup K.
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "thetawb/heisenberg.hpp"
#include "thetawb/poly.hpp"

namespace thetawb {

/// Q0 = sum X_s^4; Qlam(l) = sum X_s^2 X_{s+l}^2; QLam({l,m,l+m}) = sum X_s X_{s+l} X_{s+m} X_{s+l+m}.
struct QuarticLabel {
  enum class Kind { Q0, Qlam, QLam };

  Kind kind = Kind::Q0;
  /// Empty for Q0, {l} for Qlam, the three nonzero elements of the plane in
  /// increasing order for QLam.
  std::vector<BitVec> data;

  std::string type_name() const;
  friend bool operator==(const QuarticLabel&, const QuarticLabel&) = default;
};

struct LabeledQuartic {
  QuarticLabel label;
  RatPoly poly;
};

/// (2^g + 1)(2^{g-1} + 1) / 3.
std::size_t invariant_quartic_dimension(int g);

/// Basis of the invariant quartics: Q0, then Qlam by increasing l, then QLam
/// by increasing (l, m). Requires 2 <= g <= 8.
std::vector<LabeledQuartic> quartic_basis(int g);

/// 1 + (2^g - 1) + (2^g - 1)(2^g - 2)/6.
std::size_t k_invariant_cubic_dimension(int g);

/// The monomials X_a X_b X_c with a + b + c = 0, in canonical order.
std::vector<RatPoly> k_invariant_cubics(int g);

/// An invariant quartic together with its coordinates in quartic_basis(g).
template <class Coeff>
struct QuarticSolution {
  std::vector<Coeff> coordinates;
  Poly<Coeff> quartic;
};

/// The unique invariant quartic Q with dQ/dX_0 = F. Throws
/// std::invalid_argument when F is not a K-invariant homogeneous cubic.
QuarticSolution<mpq_class> quartic_from_cubic(const RatPoly& cubic);

/// Complex version; additionally rejects F when the solved quartic misses F
/// by more than rel_tol relative to F's largest coefficient.
QuarticSolution<std::complex<double>> quartic_from_cubic(const ComplexPoly& cubic, double rel_tol = 1e-10);

/// Eigenspaces of eta = (1, 0, chi_c) on V. The +1 eigenspace is spanned by
/// X_s with c.s = 0; it is reindexed onto F_2^{g-1} by deleting the lowest
/// set bit of c.
struct EigenspaceBasis {
  int g = 0;
  BitVec eta;
  int pivot = 0;
  std::vector<BitVec> plus_indices;
  std::vector<BitVec> minus_indices;

  bool is_plus(BitVec s) const { return dot(eta, s) == 0; }
  /// Image in F_2^{g-1} of a +1 index.
  BitVec reindex(BitVec s) const;
};

EigenspaceBasis eigenspace_basis(BitVec eta);

/// Sets X_s = 0 for s in the -1 eigenspace and renames the survivors, giving
/// a polynomial in 2^{g-1} variables.
template <class Coeff>
Poly<Coeff> restrict_to_eigenspace(const Poly<Coeff>& f, const EigenspaceBasis& basis);

/// Sets X_s = 0 for s in the +1 eigenspace; variables keep their names.
RatPoly restrict_to_minus_eigenspace(const RatPoly& f, const EigenspaceBasis& basis);

struct RestrictionCertificate {
  int g = 0;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  bool injective = false;
  /// Set for g = 2, where injectivity is not expected.
  bool outside_hypothesis = false;
};

/// Exact rank of the map of K-invariant cubics into the direct sum of their
/// restrictions to all eigenspaces V_eta, eta in K \ {0}. Blocks are built
/// in parallel and stacked in increasing eta order.
RestrictionCertificate combined_restriction_is_injective(int g);

}  // namespace thetawb
