#include "thetawb/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

#include "thetawb/ratmatrix.hpp"

namespace thetawb {

namespace {

void require_genus_range(int g, int lo, int hi) {
  if (g < lo || g > hi) {
    throw std::invalid_argument("genus " + std::to_string(g) + " outside [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "]");
  }
}

Monomial::Var var(std::uint32_t s) { return static_cast<Monomial::Var>(s); }

RatPoly orbit_sum(int g, std::initializer_list<std::uint32_t> offsets) {
  const std::uint32_t n = 1u << g;
  RatPoly p(g);
  std::vector<Monomial::Var> vars;
  for (std::uint32_t s = 0; s < n; ++s) {
    vars.clear();
    for (auto o : offsets) vars.push_back(var(s ^ o));
    p.add_term(Monomial(vars), 1);
  }
  return p;
}

template <class Coeff>
void require_k_invariant_cubic(const Poly<Coeff>& f) {
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != 3) throw std::invalid_argument("expected a homogeneous cubic");
    if (m.xor_sum() != 0) throw std::invalid_argument("cubic is not K-invariant");
  }
}

/// Columns: dQ_i/dX_0 for the quartic basis. Rows: K-invariant cubic
/// monomials in canonical order.
struct DerivativeSystem {
  std::vector<LabeledQuartic> basis;
  std::vector<Monomial> rows;
  std::map<Monomial, std::size_t> row_of;
  std::vector<RatPoly> derivatives;
};

DerivativeSystem derivative_system(int g) {
  DerivativeSystem sys;
  sys.basis = quartic_basis(g);
  for (const auto& c : k_invariant_cubics(g)) sys.rows.push_back(c.terms().begin()->first);
  for (std::size_t i = 0; i < sys.rows.size(); ++i) sys.row_of.emplace(sys.rows[i], i);
  for (const auto& q : sys.basis) sys.derivatives.push_back(partial_derivative(q.poly, BitVec::zero(g)));
  return sys;
}

}  // namespace

std::string QuarticLabel::type_name() const {
  switch (kind) {
    case Kind::Q0:
      return "Q0";
    case Kind::Qlam:
      return "Qlam";
    case Kind::QLam:
      return "QLam";
  }
  return "?";
}

std::size_t invariant_quartic_dimension(int g) {
  const std::size_t n = std::size_t{1} << g;
  return (n + 1) * (n / 2 + 1) / 3;
}

std::vector<LabeledQuartic> quartic_basis(int g) {
  require_genus_range(g, 2, 8);
  const std::uint32_t n = 1u << g;
  std::vector<LabeledQuartic> out;
  out.push_back({{QuarticLabel::Kind::Q0, {}}, orbit_sum(g, {0, 0, 0, 0})});
  for (std::uint32_t l = 1; l < n; ++l)
    out.push_back({{QuarticLabel::Kind::Qlam, {BitVec(l, g)}}, orbit_sum(g, {0, 0, l, l})});
  for (std::uint32_t l = 1; l < n; ++l) {
    for (std::uint32_t m = l + 1; m < n; ++m) {
      const std::uint32_t k = l ^ m;
      if (k < m) continue;
      out.push_back({{QuarticLabel::Kind::QLam, {BitVec(l, g), BitVec(m, g), BitVec(k, g)}},
                     orbit_sum(g, {0, l, m, k})});
    }
  }
  return out;
}

std::size_t k_invariant_cubic_dimension(int g) {
  const std::size_t n = std::size_t{1} << g;
  return 1 + (n - 1) + (n - 1) * (n - 2) / 6;
}

std::vector<RatPoly> k_invariant_cubics(int g) {
  require_genus_range(g, 1, 8);
  std::vector<RatPoly> out;
  for (const auto& m : all_monomials(g, 3))
    if (m.xor_sum() == 0) out.push_back(RatPoly::term(g, m, 1));
  return out;
}

QuarticSolution<mpq_class> quartic_from_cubic(const RatPoly& cubic) {
  require_k_invariant_cubic(cubic);
  const int g = cubic.genus();
  const auto sys = derivative_system(g);

  RatMatrix a(sys.rows.size(), sys.basis.size());
  for (std::size_t j = 0; j < sys.derivatives.size(); ++j)
    for (const auto& [m, c] : sys.derivatives[j].terms()) a(sys.row_of.at(m), j) = c;
  std::vector<mpq_class> rhs(sys.rows.size());
  for (const auto& [m, c] : cubic.terms()) rhs[sys.row_of.at(m)] = c;

  auto x = solve(a, rhs);
  if (!x) throw std::invalid_argument("cubic is not in the image of d/dX_0");

  QuarticSolution<mpq_class> out{*x, RatPoly(g)};
  for (std::size_t j = 0; j < sys.basis.size(); ++j) out.quartic += sys.basis[j].poly.scaled((*x)[j]);
  return out;
}

QuarticSolution<std::complex<double>> quartic_from_cubic(const ComplexPoly& cubic, double rel_tol) {
  require_k_invariant_cubic(cubic);
  const int g = cubic.genus();
  const auto sys = derivative_system(g);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(sys.rows.size()),
                                              static_cast<Eigen::Index>(sys.basis.size()));
  for (std::size_t j = 0; j < sys.derivatives.size(); ++j)
    for (const auto& [m, c] : sys.derivatives[j].terms())
      a(static_cast<Eigen::Index>(sys.row_of.at(m)), static_cast<Eigen::Index>(j)) = c.get_d();
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(a.rows());
  for (const auto& [m, c] : cubic.terms()) rhs(static_cast<Eigen::Index>(sys.row_of.at(m))) = c;

  const Eigen::VectorXcd x = a.fullPivLu().solve(rhs);
  const double scale = std::max(rhs.cwiseAbs().maxCoeff(), 1e-300);
  if ((a * x - rhs).cwiseAbs().maxCoeff() > rel_tol * scale)
    throw std::invalid_argument("cubic is not in the image of d/dX_0");

  QuarticSolution<std::complex<double>> out{{}, ComplexPoly(g)};
  for (std::size_t j = 0; j < sys.basis.size(); ++j) {
    const std::complex<double> cj = x(static_cast<Eigen::Index>(j));
    out.coordinates.push_back(cj);
    out.quartic += to_complex(sys.basis[j].poly).scaled(cj);
  }
  return out;
}

BitVec EigenspaceBasis::reindex(BitVec s) const {
  if (!is_plus(s)) throw std::invalid_argument("index is not in the +1 eigenspace");
  const std::uint32_t low = s.bits() & ((1u << pivot) - 1);
  const std::uint32_t high = s.bits() >> (pivot + 1);
  return BitVec(low | (high << pivot), g - 1);
}

EigenspaceBasis eigenspace_basis(BitVec eta) {
  if (eta.is_zero()) throw std::invalid_argument("eta must be nonzero");
  if (eta.genus() < 2) throw std::invalid_argument("eigenspace restriction needs g >= 2");
  EigenspaceBasis b;
  b.g = eta.genus();
  b.eta = eta;
  b.pivot = std::countr_zero(eta.bits());
  for (std::uint32_t s = 0; s < (1u << b.g); ++s) {
    BitVec v(s, b.g);
    (b.is_plus(v) ? b.plus_indices : b.minus_indices).push_back(v);
  }
  return b;
}

template <class Coeff>
Poly<Coeff> restrict_to_eigenspace(const Poly<Coeff>& f, const EigenspaceBasis& basis) {
  require_same_genus(f.genus(), basis.g);
  Poly<Coeff> out(basis.g - 1);
  std::vector<Monomial::Var> vars;
  for (const auto& [m, c] : f.terms()) {
    vars.clear();
    bool survives = true;
    for (auto v : m.vars()) {
      BitVec s(v, basis.g);
      if (!basis.is_plus(s)) {
        survives = false;
        break;
      }
      vars.push_back(var(basis.reindex(s).bits()));
    }
    if (survives) out.add_term(Monomial(vars), c);
  }
  return out;
}

template RatPoly restrict_to_eigenspace(const RatPoly&, const EigenspaceBasis&);
template ComplexPoly restrict_to_eigenspace(const ComplexPoly&, const EigenspaceBasis&);

RatPoly restrict_to_minus_eigenspace(const RatPoly& f, const EigenspaceBasis& basis) {
  require_same_genus(f.genus(), basis.g);
  RatPoly out(basis.g);
  for (const auto& [m, c] : f.terms()) {
    bool survives = std::none_of(m.vars().begin(), m.vars().end(),
                                 [&](auto v) { return basis.is_plus(BitVec(v, basis.g)); });
    if (survives) out.add_term(m, c);
  }
  return out;
}

RestrictionCertificate combined_restriction_is_injective(int g) {
  require_genus_range(g, 2, 8);
  const auto cubics = k_invariant_cubics(g);
  const auto target = all_monomials(g - 1, 3);
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);

  const int num_eta = (1 << g) - 1;
  std::vector<RatMatrix> blocks(static_cast<std::size_t>(num_eta));
#pragma omp parallel for schedule(dynamic)
  for (int e = 1; e <= num_eta; ++e) {
    const auto basis = eigenspace_basis(BitVec(static_cast<std::uint32_t>(e), g));
    RatMatrix block(target.size(), cubics.size());
    for (std::size_t j = 0; j < cubics.size(); ++j) {
      const RatPoly restricted = restrict_to_eigenspace(cubics[j], basis);
      for (const auto& [m, c] : restricted.terms()) block(row_of.at(m), j) = c;
    }
    blocks[static_cast<std::size_t>(e - 1)] = std::move(block);
  }

  RatMatrix stacked;
  for (const auto& b : blocks) stacked.append_rows(b);

  RestrictionCertificate cert;
  cert.g = g;
  cert.dimension = cubics.size();
  cert.rank = rank(stacked);
  cert.injective = cert.rank == cert.dimension;
  cert.outside_hypothesis = g < 3;
  return cert;
}

}  // namespace thetawb
