#include "thetawb/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include <omp.h>

#include "thetawb/errors.hpp"

namespace thetawb::kernels {

int worker_threads() {
  int n = omp_get_max_threads();
  if (const char* cap = std::getenv("THETA_MAX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v > 0 && v < n) n = static_cast<int>(v);
  }
  return n;
}

LatticePlan make_lattice_plan(const SiegelTau& tau, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("theta tolerance must lie in (0,1)");
  LatticePlan plan;
  plan.g = tau.genus();
  plan.tau = tau.matrix();
  plan.imag = tau.imag();
  plan.imag_inverse = plan.imag.inverse();
  plan.quad = 4.0 * std::numbers::pi * plan.imag;
  // Terms farther than R from the centre are below tol times the dominant
  // term, whose distance from the centre is at most sqrt(tr Q)/2.
  plan.radius = std::sqrt(2.0 * std::log(1.0 / tol) + plan.quad.trace() / 4.0) + 1.0;
  if (plan.radius > kMaxLatticeRadius) {
    throw NumericIndeterminate("lattice truncation radius " + std::to_string(plan.radius) + " exceeds cap " +
                               std::to_string(kMaxLatticeRadius));
  }
  const Eigen::MatrixXd quad_inv = plan.quad.inverse();
  plan.half_width = plan.radius * quad_inv.diagonal().cwiseSqrt();
  return plan;
}

std::vector<Complex> theta2_with_plan(const Eigen::VectorXcd& z, const LatticePlan& plan) {
  using std::numbers::pi;
  const int g = plan.g;
  const std::size_t nchar = std::size_t{1} << g;
  // |term| is maximal at v = -Y^{-1} Im z.
  const Eigen::VectorXd centre = -plan.imag_inverse * z.imag();
  const double r2 = plan.radius * plan.radius;
  const Complex two_pi_i(0.0, 2.0 * pi);

  std::vector<Complex> out(nchar);
  Eigen::VectorXd v(g);
  Eigen::VectorXd dv(g);
  Eigen::VectorXcd vc(g);
  std::vector<long> lo(static_cast<std::size_t>(g)), hi(static_cast<std::size_t>(g)), n(static_cast<std::size_t>(g));
  for (std::size_t s = 0; s < nchar; ++s) {
    for (int i = 0; i < g; ++i) {
      const double c = ((s >> i) & 1u) ? 0.5 : 0.0;
      lo[i] = static_cast<long>(std::ceil(centre(i) - c - plan.half_width(i)));
      hi[i] = static_cast<long>(std::floor(centre(i) - c + plan.half_width(i)));
      n[i] = lo[i];
    }
    Complex sum = 0.0;
    bool done = false;
    for (int i = 0; i < g; ++i) done = done || lo[i] > hi[i];
    while (!done) {
      for (int i = 0; i < g; ++i) v(i) = static_cast<double>(n[i]) + (((s >> i) & 1u) ? 0.5 : 0.0);
      dv = v - centre;
      if (dv.dot(plan.quad * dv) <= r2) {
        vc = v.cast<Complex>();
        // pi i v^T (2 tau) v + 2 pi i v^T (2 z)
        const Complex quad_form = vc.dot(plan.tau * vc);
        const Complex linear = vc.dot(z);
        sum += std::exp(two_pi_i * (quad_form + 2.0 * linear));
      }
      int i = 0;
      while (i < g && n[i] == hi[i]) {
        n[i] = lo[i];
        ++i;
      }
      if (i == g) {
        done = true;
      } else {
        ++n[i];
      }
    }
    out[s] = sum;
  }
  return out;
}

namespace {

struct CompiledTerm {
  std::vector<Monomial::Var> vars;
  double coeff;
};

std::vector<std::vector<CompiledTerm>> compile(const std::vector<RatPoly>& basis) {
  std::vector<std::vector<CompiledTerm>> out;
  out.reserve(basis.size());
  for (const auto& p : basis) {
    std::vector<CompiledTerm> terms;
    for (const auto& [m, c] : p.terms()) terms.push_back({{m.vars().begin(), m.vars().end()}, c.get_d()});
    out.push_back(std::move(terms));
  }
  return out;
}

void check_points(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis) {
  for (const auto& p : basis)
    for (const auto& pt : points)
      if (pt.coords.size() != p.num_variables()) throw std::invalid_argument("point dimension mismatch");
}

void fill_row(Eigen::MatrixXcd& m, Eigen::Index r, const KummerPoint& pt,
              const std::vector<std::vector<CompiledTerm>>& cols) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Complex acc = 0.0;
    for (const auto& t : cols[j]) {
      Complex prod = 1.0;
      for (auto v : t.vars) prod *= pt.coords[v];
      acc += t.coeff * prod;
    }
    m(r, static_cast<Eigen::Index>(j)) = acc;
  }
}

}  // namespace

namespace serial {

std::vector<KummerPoint> theta2_batch(const SiegelTau& tau, std::span<const Eigen::VectorXcd> zs, double tol) {
  const LatticePlan plan = make_lattice_plan(tau, tol);
  std::vector<KummerPoint> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(KummerPoint::normalized(theta2_with_plan(z, plan)));
  return out;
}

Eigen::MatrixXcd evaluation_matrix(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis) {
  check_points(points, basis);
  const auto cols = compile(basis);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t r = 0; r < points.size(); ++r) fill_row(m, static_cast<Eigen::Index>(r), points[r], cols);
  return m;
}

}  // namespace serial

namespace omp {

std::vector<KummerPoint> theta2_batch(const SiegelTau& tau, std::span<const Eigen::VectorXcd> zs, double tol) {
  const LatticePlan plan = make_lattice_plan(tau, tol);
  std::vector<KummerPoint> out(zs.size());
  const long n = static_cast<long>(zs.size());
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = KummerPoint::normalized(theta2_with_plan(zs[static_cast<std::size_t>(i)], plan));
  }
  return out;
}

Eigen::MatrixXcd evaluation_matrix(std::span<const KummerPoint> points, const std::vector<RatPoly>& basis) {
  check_points(points, basis);
  const auto cols = compile(basis);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(basis.size()));
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long r = 0; r < n; ++r) fill_row(m, r, points[static_cast<std::size_t>(r)], cols);
  return m;
}

}  // namespace omp

}  // namespace thetawb::kernels
