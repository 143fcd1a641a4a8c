#include <doctest.h>

#include <cstdlib>

#include <omp.h>

#include "thetawb/errors.hpp"
#include "thetawb/invariants.hpp"
#include "thetawb/kernels.hpp"

using namespace thetawb;

namespace {

std::vector<Eigen::VectorXcd> sample_points(const SiegelTau& tau, std::size_t n, std::uint64_t seed) {
  std::vector<Eigen::VectorXcd> zs;
  for (const auto& s : sample_kummer(tau, n, seed)) zs.push_back(s.z);
  return zs;
}

}  // namespace

TEST_CASE("theta2_batch: OpenMP output is bit-identical to serial") {
  for (int g = 2; g <= 4; ++g) {
    const SiegelTau tau = random_tau(g, 100 + static_cast<std::uint64_t>(g));
    const auto zs = sample_points(tau, 64, 5);
    const auto a = kernels::serial::theta2_batch(tau, zs, 1e-12);
    const auto b = kernels::omp::theta2_batch(tau, zs, 1e-12);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].coords == b[i].coords);
  }
  const SiegelTau tau = random_tau(2, 1);
  CHECK(kernels::omp::theta2_batch(tau, {}, 1e-12).empty());
}

TEST_CASE("evaluation_matrix: OpenMP output is bit-identical to serial") {
  const SiegelTau tau = random_tau(3, 2024);
  const auto pts = points_of(sample_kummer(tau, 80, 9));
  std::vector<RatPoly> quartics;
  for (const auto& q : quartic_basis(3)) quartics.push_back(q.poly);
  const Eigen::MatrixXcd a = kernels::serial::evaluation_matrix(pts, quartics);
  const Eigen::MatrixXcd b = kernels::omp::evaluation_matrix(pts, quartics);
  CHECK(a.rows() == 80);
  CHECK(a.cols() == 15);
  CHECK(a == b);
  // Entry (i,j) is Q_j evaluated at point i.
  CHECK(a(3, 0) == evaluate(to_complex(quartics[0]), std::span<const Complex>(pts[3].coords)));
}

TEST_CASE("worker_threads honours THETA_MAX_THREADS") {
  const int max = omp_get_max_threads();
  ::setenv("THETA_MAX_THREADS", "1", 1);
  CHECK(kernels::worker_threads() == 1);
  ::setenv("THETA_MAX_THREADS", "0", 1);
  CHECK(kernels::worker_threads() == max);
  ::setenv("THETA_MAX_THREADS", "two", 1);
  CHECK(kernels::worker_threads() == max);
  ::setenv("THETA_MAX_THREADS", "100000", 1);
  CHECK(kernels::worker_threads() == max);
  ::unsetenv("THETA_MAX_THREADS");
  CHECK(kernels::worker_threads() == max);
}

TEST_CASE("lattice plan") {
  const SiegelTau tau = random_tau(3, 2024);
  const auto plan = kernels::make_lattice_plan(tau, 1e-12);
  const double expect = std::sqrt(2.0 * std::log(1e12) + plan.quad.trace() / 4.0) + 1.0;
  CHECK(plan.radius == doctest::Approx(expect));
  CHECK(plan.radius <= kMaxLatticeRadius);
  CHECK(plan.half_width.size() == 3);
  CHECK_THROWS_AS(kernels::make_lattice_plan(tau, 1e-300), NumericIndeterminate);
  CHECK_THROWS_AS(kernels::make_lattice_plan(tau, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(kernels::make_lattice_plan(tau, 1.0), std::invalid_argument);
}
