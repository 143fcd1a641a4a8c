// Second-order theta functions of a principally polarized abelian variety
// given by a Siegel matrix, Kummer sampling, and numerical recovery of the
// forms vanishing on the Kummer image.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "thetawb/poly.hpp"

namespace thetawb {

using Complex = std::complex<double>;

/// Symmetric g x g complex matrix with positive definite imaginary part.
class SiegelTau {
 public:
  explicit SiegelTau(Eigen::MatrixXcd tau);

  int genus() const { return static_cast<int>(tau_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return tau_; }
  Eigen::MatrixXd imag() const { return tau_.imag(); }
  double min_imag_eigenvalue() const;

 private:
  Eigen::MatrixXcd tau_;
};

/// Re tau uniform in [-1/2, 1/2]; Im tau = M^T M + I with M uniform in
/// [0,1], then its spectrum mapped affinely onto [1,3]. Requires g in {2,3,4}.
SiegelTau random_tau(int g, std::uint64_t seed);

inline constexpr double kDefaultThetaTol = 1e-12;
inline constexpr double kMaxLatticeRadius = 12.0;

/// Theta_s(z) = sum_{n in Z^g} exp(pi i v^T (2 tau) v + 2 pi i v^T (2z)),
/// v = n + s/2, for all s in F_2^g (index = bitmask, bit i = coordinate i).
/// The sum runs over ||v - c||_Q <= R with Q = 4 pi Im tau centred at the
/// dominant term, R = sqrt(2 ln(1/tol) + tr(Q)/4) + 1. Throws
/// NumericIndeterminate when R exceeds kMaxLatticeRadius.
std::vector<Complex> theta2_raw(const Eigen::VectorXcd& z, const SiegelTau& tau, double tol = kDefaultThetaTol);

/// 2^g coordinates scaled to unit sup-norm with the first nonzero coordinate
/// real and positive.
struct KummerPoint {
  std::vector<Complex> coords;

  static KummerPoint normalized(std::vector<Complex> raw);
};

KummerPoint theta2_vector(const Eigen::VectorXcd& z, const SiegelTau& tau, double tol = kDefaultThetaTol);

struct KummerSample {
  Eigen::VectorXcd z;
  KummerPoint point;
};

/// z = (x + tau y)/2 with x, y uniform in [0,1)^g, drawn in order (x then y
/// per point) from a seeded mt19937_64. Theta evaluation runs in parallel;
/// results do not depend on the thread count.
std::vector<KummerSample> sample_kummer(const SiegelTau& tau, std::size_t n, std::uint64_t seed,
                                        double tol = kDefaultThetaTol);

/// z + (a + tau b)/2 for a, b in {0,1}^g given as bitmasks.
Eigen::VectorXcd half_period_shift(const Eigen::VectorXcd& z, const SiegelTau& tau, std::uint32_t a,
                                   std::uint32_t b);

inline constexpr double kDefaultRankTol = 1e-7;
inline constexpr double kMinGapRatio = 1e3;

struct RelationKernel {
  std::size_t dim = 0;
  /// Columns span the kernel; rows index the basis polynomials.
  Eigen::MatrixXcd basis;
  /// Singular values in decreasing order.
  std::vector<double> spectrum;
  /// Smallest kept over largest discarded singular value; +inf when nothing
  /// is discarded or the largest discarded value is exactly zero.
  double gap_ratio = 0.0;
};

/// Kernel of the evaluation matrix (rows = points, columns = basis forms).
/// Singular values below rank_tol * sigma_max are discarded. Throws
/// std::invalid_argument when #points < 2 * #basis + 20 and
/// NumericIndeterminate (with the spectrum) when the gap ratio is below 10^3.
RelationKernel relation_kernel(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis,
                               double rank_tol = kDefaultRankTol);

std::vector<KummerPoint> points_of(const std::vector<KummerSample>& samples);

/// Seed used for the fresh validation samples of a reconstruction.
std::uint64_t validation_seed(std::uint64_t seed);

struct QuarticReconstruction {
  /// Coordinates in quartic_basis(g), scaled so the largest has value 1.
  std::vector<Complex> coordinates;
  ComplexPoly quartic{1};
  RelationKernel kernel;
  /// max |Q(p)| / (max coeff of Q) over fresh samples.
  double value_residual = 0.0;
  /// max over s and fresh samples of |dQ/dX_s(p)| / (max coeff of dQ/dX_s);
  /// only computed for the Coble quartic.
  double gradient_residual = 0.0;
  /// max over J[2] generators x of max|x.Q - Q| / max|Q|.
  double invariance_residual = 0.0;
};

inline constexpr std::size_t kValidationSamples = 50;
inline constexpr double kResidualTol = 1e-8;

/// g = 3: the unique invariant quartic singular along the Kummer image,
/// recovered from the one-dimensional kernel of K-invariant cubics.
/// Throws CheckFailure when the partials fail to vanish on fresh samples.
QuarticReconstruction coble_quartic(const SiegelTau& tau, std::uint64_t seed, double tol = kDefaultThetaTol);

/// g = 2: the invariant quartic vanishing on the Kummer surface.
QuarticReconstruction kummer_quartic(const SiegelTau& tau, std::uint64_t seed, double tol = kDefaultThetaTol);

/// Coefficientwise max |a_i - b_i| after both are scaled so their largest
/// coordinate is 1.
double projective_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace thetawb
