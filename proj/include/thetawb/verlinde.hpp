// Dimension counts: SU(2) Verlinde numbers and related binomial counts.
#pragma once

#include <gmpxx.h>

namespace thetawb {

struct VerlindeResult {
  mpz_class value;
  long precision_bits = 0;
  /// |sum - round(sum)| at the final precision.
  double residual = 0.0;
};

/// ((k+2)/2)^{g-1} sum_{j=1}^{k+1} sin(j pi/(k+2))^{2-2g}, evaluated in
/// binary floating point with 64 + 8 g log2(k+2) bits and rounded. The
/// rounding residual must be below 2^-32; on failure the precision is doubled
/// once, then NumericIndeterminate is thrown. Requires g >= 2, 1 <= k <= 64.
VerlindeResult verlinde_su2_detailed(int g, int k);

inline mpz_class verlinde_su2(int g, int k) { return verlinde_su2_detailed(g, k).value; }

/// C(2^g + n - 1, n).
mpz_class sym_power_dim(int g, int n);

/// (3^g + 1) / 2.
mpz_class invariant_quartic_count(int g);

/// n^g / 2 + 2^{g-1} for even n >= 2; odd n is rejected.
mpz_class even_theta_dim(int g, int n);

}  // namespace thetawb
