// Data-parallel kernels for the numeric side. Each kernel has a serial
// reference and an OpenMP version that must produce bit-identical output.
#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "thetawb/poly.hpp"
#include "thetawb/thetanum.hpp"

namespace thetawb::kernels {

/// Worker count for OpenMP regions: omp_get_max_threads(), capped by the
/// THETA_MAX_THREADS environment variable when set to a positive integer.
int worker_threads();

/// Truncation data for the lattice sums; depends only on tau and tol.
struct LatticePlan {
  int g = 0;
  Eigen::MatrixXcd tau;
  Eigen::MatrixXd imag;
  Eigen::MatrixXd imag_inverse;
  /// Q = 4 pi Im tau.
  Eigen::MatrixXd quad;
  double radius = 0.0;
  /// Half-widths R sqrt((Q^{-1})_ii) of the enclosing box.
  Eigen::VectorXd half_width;
};

/// Throws NumericIndeterminate when the radius exceeds kMaxLatticeRadius.
LatticePlan make_lattice_plan(const SiegelTau& tau, double tol);

/// Unnormalized Theta_s(z) for all s; never throws.
std::vector<Complex> theta2_with_plan(const Eigen::VectorXcd& z, const LatticePlan& plan);

namespace serial {

std::vector<KummerPoint> theta2_batch(const SiegelTau& tau, std::span<const Eigen::VectorXcd> zs, double tol);

Eigen::MatrixXcd evaluation_matrix(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis);

}  // namespace serial

namespace omp {

std::vector<KummerPoint> theta2_batch(const SiegelTau& tau, std::span<const Eigen::VectorXcd> zs, double tol);

Eigen::MatrixXcd evaluation_matrix(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis);

}  // namespace omp

}  // namespace thetawb::kernels
