#include "thetawb/thetanum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "thetawb/errors.hpp"
#include "thetawb/invariants.hpp"
#include "thetawb/kernels.hpp"

namespace thetawb {

SiegelTau::SiegelTau(Eigen::MatrixXcd tau) : tau_(std::move(tau)) {
  if (tau_.rows() != tau_.cols() || tau_.rows() < 1) throw std::invalid_argument("tau must be square");
  if ((tau_ - tau_.transpose()).norm() >= 1e-14) throw std::invalid_argument("tau must be symmetric");
  if (min_imag_eigenvalue() <= 0.0) throw std::invalid_argument("Im tau must be positive definite");
}

double SiegelTau::min_imag_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(imag());
  return es.eigenvalues().minCoeff();
}

SiegelTau random_tau(int g, std::uint64_t seed) {
  if (g < 2 || g > 4) throw std::invalid_argument("random_tau supports g in {2,3,4}");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Eigen::MatrixXd re(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) re(i, j) = re(j, i) = unit(rng) - 0.5;
  Eigen::MatrixXd m(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) m(i, j) = unit(rng);
  const Eigen::MatrixXd a = m.transpose() * m + Eigen::MatrixXd::Identity(g, g);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd lam = es.eigenvalues();
  const double lo = lam.minCoeff();
  const double hi = lam.maxCoeff();
  Eigen::VectorXd mapped(g);
  for (int i = 0; i < g; ++i) mapped(i) = hi > lo ? 1.0 + 2.0 * (lam(i) - lo) / (hi - lo) : 2.0;
  Eigen::MatrixXd im = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
  im = 0.5 * (im + im.transpose());

  Eigen::MatrixXcd tau(g, g);
  tau.real() = re;
  tau.imag() = im;
  return SiegelTau(tau);
}

std::vector<Complex> theta2_raw(const Eigen::VectorXcd& z, const SiegelTau& tau, double tol) {
  if (z.size() != tau.genus()) throw std::invalid_argument("z has the wrong dimension");
  return kernels::theta2_with_plan(z, kernels::make_lattice_plan(tau, tol));
}

KummerPoint KummerPoint::normalized(std::vector<Complex> raw) {
  auto first = std::find_if(raw.begin(), raw.end(), [](Complex c) { return c != 0.0; });
  if (first != raw.end()) {
    const Complex phase = std::conj(*first) / std::abs(*first);
    double sup = 0.0;
    for (auto& c : raw) {
      c *= phase;
      sup = std::max(sup, std::abs(c));
    }
    for (auto& c : raw) c /= sup;
    raw[static_cast<std::size_t>(first - raw.begin())].imag(0.0);
  }
  return KummerPoint{std::move(raw)};
}

KummerPoint theta2_vector(const Eigen::VectorXcd& z, const SiegelTau& tau, double tol) {
  return KummerPoint::normalized(theta2_raw(z, tau, tol));
}

std::vector<KummerSample> sample_kummer(const SiegelTau& tau, std::size_t n, std::uint64_t seed, double tol) {
  const int g = tau.genus();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Eigen::VectorXcd> zs;
  zs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::VectorXd x(g), y(g);
    for (int i = 0; i < g; ++i) x(i) = unit(rng);
    for (int i = 0; i < g; ++i) y(i) = unit(rng);
    zs.push_back(0.5 * (x.cast<Complex>() + tau.matrix() * y.cast<Complex>()));
  }
  auto points = kernels::omp::theta2_batch(tau, zs, tol);
  std::vector<KummerSample> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back({std::move(zs[k]), std::move(points[k])});
  return out;
}

Eigen::VectorXcd half_period_shift(const Eigen::VectorXcd& z, const SiegelTau& tau, std::uint32_t a,
                                   std::uint32_t b) {
  const int g = tau.genus();
  Eigen::VectorXcd av(g), bv(g);
  for (int i = 0; i < g; ++i) {
    av(i) = ((a >> i) & 1u) ? 1.0 : 0.0;
    bv(i) = ((b >> i) & 1u) ? 1.0 : 0.0;
  }
  return z + 0.5 * (av + tau.matrix() * bv);
}

RelationKernel relation_kernel(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis,
                               double rank_tol) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  if (points.size() < 2 * basis.size() + 20) {
    throw std::invalid_argument("relation_kernel needs at least 2*basis+20 points, got " +
                                std::to_string(points.size()));
  }
  const Eigen::MatrixXcd eval = kernels::omp::evaluation_matrix(points, basis);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(eval, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();

  RelationKernel out;
  out.spectrum.assign(sv.data(), sv.data() + sv.size());
  const double sigma_max = sv.size() ? sv(0) : 0.0;
  const double threshold = rank_tol * sigma_max;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) >= threshold) ++rank;

  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  out.dim = static_cast<std::size_t>(cols - rank);
  if (rank == cols || sv(rank) == 0.0) {
    out.gap_ratio = std::numeric_limits<double>::infinity();
  } else {
    out.gap_ratio = rank > 0 ? sv(rank - 1) / sv(rank) : 0.0;
  }
  if (out.gap_ratio < kMinGapRatio) {
    throw NumericIndeterminate("indeterminate rank: gap ratio " + std::to_string(out.gap_ratio) +
                                   " below " + std::to_string(kMinGapRatio),
                               out.spectrum);
  }
  out.basis = svd.matrixV().rightCols(cols - rank);
  return out;
}

std::vector<KummerPoint> points_of(const std::vector<KummerSample>& samples) {
  std::vector<KummerPoint> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.point);
  return out;
}

std::uint64_t validation_seed(std::uint64_t seed) {
  // splitmix64 finalizer: decorrelates the validation stream from the fit stream.
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double projective_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("coordinate length mismatch");
  auto scaled = [](std::span<const Complex> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[best])) best = i;
    std::vector<Complex> out(v.begin(), v.end());
    for (auto& c : out) c /= v[best];
    return out;
  };
  const auto sa = scaled(a);
  const auto sb = scaled(b);
  double d = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) d = std::max(d, std::abs(sa[i] - sb[i]));
  return d;
}

namespace {

std::size_t index_of_largest(const Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  v.cwiseAbs().maxCoeff(&best);
  return static_cast<std::size_t>(best);
}

double value_residual(const ComplexPoly& q, const std::vector<KummerSample>& fresh) {
  const double scale = max_abs_coefficient(q);
  double worst = 0.0;
  for (const auto& s : fresh) worst = std::max(worst, std::abs(evaluate(q, std::span<const Complex>(s.point.coords))));
  return worst / scale;
}

double invariance_residual(const ComplexPoly& q) {
  const double scale = max_abs_coefficient(q);
  double worst = 0.0;
  for (const auto& x : j2_generators(q.genus())) worst = std::max(worst, max_abs_coefficient(heis_act_poly(x, q) - q));
  return worst / scale;
}

RelationKernel one_dimensional_kernel(const SiegelTau& tau, const std::vector<RatPoly>& basis, std::uint64_t seed,
                                      double tol) {
  const auto samples = sample_kummer(tau, 2 * basis.size() + 20, seed, tol);
  const auto points = points_of(samples);
  RelationKernel k = relation_kernel(points, basis);
  if (k.dim != 1) {
    throw NumericIndeterminate("expected a one-dimensional relation kernel, found dimension " + std::to_string(k.dim),
                               k.spectrum);
  }
  return k;
}

}  // namespace

QuarticReconstruction coble_quartic(const SiegelTau& tau, std::uint64_t seed, double tol) {
  if (tau.genus() != 3) throw std::invalid_argument("coble_quartic needs g = 3");
  const auto cubics = k_invariant_cubics(3);
  QuarticReconstruction out;
  out.kernel = one_dimensional_kernel(tau, cubics, seed, tol);

  const Eigen::VectorXcd f = out.kernel.basis.col(0);
  ComplexPoly cubic(3);
  for (std::size_t j = 0; j < cubics.size(); ++j) cubic += to_complex(cubics[j]).scaled(f(static_cast<Eigen::Index>(j)));
  const auto solved = quartic_from_cubic(cubic);

  Eigen::VectorXcd coords = Eigen::Map<const Eigen::VectorXcd>(solved.coordinates.data(),
                                                                static_cast<Eigen::Index>(solved.coordinates.size()));
  coords /= coords(static_cast<Eigen::Index>(index_of_largest(coords)));
  out.coordinates.assign(coords.data(), coords.data() + coords.size());
  const auto basis = quartic_basis(3);
  out.quartic = ComplexPoly(3);
  for (std::size_t j = 0; j < basis.size(); ++j) out.quartic += to_complex(basis[j].poly).scaled(out.coordinates[j]);

  const auto fresh = sample_kummer(tau, kValidationSamples, validation_seed(seed), tol);
  out.value_residual = value_residual(out.quartic, fresh);
  for (std::uint32_t s = 0; s < 8; ++s) {
    const ComplexPoly partial = partial_derivative(out.quartic, BitVec(s, 3));
    const double scale = max_abs_coefficient(partial);
    for (const auto& p : fresh) {
      out.gradient_residual = std::max(
          out.gradient_residual, std::abs(evaluate(partial, std::span<const Complex>(p.point.coords))) / scale);
    }
  }
  out.invariance_residual = invariance_residual(out.quartic);
  if (out.gradient_residual >= kResidualTol) {
    throw CheckFailure("Coble quartic partials do not vanish on the Kummer: residual " +
                       std::to_string(out.gradient_residual));
  }
  return out;
}

QuarticReconstruction kummer_quartic(const SiegelTau& tau, std::uint64_t seed, double tol) {
  if (tau.genus() != 2) throw std::invalid_argument("kummer_quartic needs g = 2");
  const auto basis = quartic_basis(2);
  std::vector<RatPoly> polys;
  for (const auto& q : basis) polys.push_back(q.poly);
  QuarticReconstruction out;
  out.kernel = one_dimensional_kernel(tau, polys, seed, tol);

  Eigen::VectorXcd coords = out.kernel.basis.col(0);
  coords /= coords(static_cast<Eigen::Index>(index_of_largest(coords)));
  out.coordinates.assign(coords.data(), coords.data() + coords.size());
  out.quartic = ComplexPoly(2);
  for (std::size_t j = 0; j < polys.size(); ++j) out.quartic += to_complex(polys[j]).scaled(out.coordinates[j]);

  const auto fresh = sample_kummer(tau, kValidationSamples, validation_seed(seed), tol);
  out.value_residual = value_residual(out.quartic, fresh);
  out.invariance_residual = invariance_residual(out.quartic);
  if (out.value_residual >= kResidualTol) {
    throw CheckFailure("Kummer quartic does not vanish on fresh samples: residual " +
                       std::to_string(out.value_residual));
  }
  return out;
}

}  // namespace thetawb
