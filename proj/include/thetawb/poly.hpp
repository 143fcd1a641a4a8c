// Sparse polynomials in the 2^g variables X_sigma.
//
// The coefficient type is a template parameter: mpq_class for the exact
// algebra, std::complex<double> for numerically reconstructed forms. Both
// share the monomial structure, the Heisenberg action and differentiation.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "thetawb/heisenberg.hpp"

namespace thetawb {

/// A monomial stored as the sorted multiset of its variable indices, so
/// X_0^2 X_5 is {0, 0, 5}. Ordered by degree, then lexicographically.
class Monomial {
 public:
  using Var = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::vector<Var> vars);

  static Monomial power(Var v, int e) { return Monomial(std::vector<Var>(static_cast<std::size_t>(e), v)); }

  int degree() const { return static_cast<int>(vars_.size()); }
  std::span<const Var> vars() const { return vars_; }
  int exponent(Var v) const;
  /// (variable, exponent) pairs in increasing variable order.
  std::vector<std::pair<Var, int>> exponents() const;
  /// XOR of all variable indices counted with multiplicity; the monomial is
  /// K-invariant iff this is zero.
  std::uint32_t xor_sum() const;

  Monomial operator*(const Monomial& other) const;
  /// The monomial with one occurrence of v removed; requires exponent(v) > 0.
  Monomial remove_one(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.vars_.size() <=> y.vars_.size(); c != 0) return c;
    return x.vars_ <=> y.vars_;
  }

 private:
  std::vector<Var> vars_;
};

/// All monomials of degree n in 2^g variables, in canonical order.
std::vector<Monomial> all_monomials(int g, int n);

template <class Coeff>
struct CoeffTraits;

template <>
struct CoeffTraits<mpq_class> {
  static bool is_zero(const mpq_class& c) { return c == 0; }
  static mpq_class from_rational(const mpq_class& q) { return q; }
  static mpq_class from_int(long v) { return mpq_class(v); }
};

template <>
struct CoeffTraits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
  static std::complex<double> from_rational(const mpq_class& q) { return {q.get_d(), 0.0}; }
  static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
};

template <class Coeff>
class Poly {
 public:
  using Traits = CoeffTraits<Coeff>;
  using TermMap = std::map<Monomial, Coeff>;

  explicit Poly(int g) : g_(g) {
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("genus out of range");
  }

  static Poly variable(BitVec v) {
    Poly p(v.genus());
    p.add_term(Monomial({static_cast<Monomial::Var>(v.bits())}), Traits::from_int(1));
    return p;
  }
  static Poly term(int g, const Monomial& m, const Coeff& c) {
    Poly p(g);
    p.add_term(m, c);
    return p;
  }

  int genus() const { return g_; }
  std::size_t num_variables() const { return std::size_t{1} << g_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (Traits::is_zero(c)) return;
    check_monomial(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  bool is_homogeneous(int n) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != n) return false;
    return true;
  }

  Poly& operator+=(const Poly& o) {
    require_same_genus(g_, o.g_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_genus(g_, o.g_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_genus(a.g_, b.g_);
    Poly out(a.g_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  Poly scaled(const Coeff& s) const {
    Poly out(g_);
    if (Traits::is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.g_ == b.g_ && a.terms_ == b.terms_; }

 private:
  void check_monomial(const Monomial& m) const {
    for (auto v : m.vars())
      if (v >= num_variables()) throw std::invalid_argument("variable index exceeds 2^g - 1");
  }

  int g_;
  TermMap terms_;
};

using RatPoly = Poly<mpq_class>;
using ComplexPoly = Poly<std::complex<double>>;

namespace detail {
template <class Coeff>
Coeff to_coeff(const mpq_class& q) {
  return CoeffTraits<Coeff>::from_rational(q);
}
}  // namespace detail

/// x . P, the action extended multiplicatively from heis_act_basis.
template <class Coeff>
Poly<Coeff> heis_act_poly(const HeisElem& x, const Poly<Coeff>& p) {
  require_same_genus(x.genus(), p.genus());
  const int g = p.genus();
  Poly<Coeff> out(g);
  std::vector<Monomial::Var> image;
  for (const auto& [m, c] : p.terms()) {
    mpq_class factor = 1;
    image.clear();
    for (auto v : m.vars()) {
      auto img = heis_act_basis(x, BitVec(v, g));
      factor *= img.scalar;
      image.push_back(static_cast<Monomial::Var>(img.index.bits()));
    }
    out.add_term(Monomial(image), c * detail::to_coeff<Coeff>(factor));
  }
  return out;
}

template <class Coeff>
Poly<Coeff> partial_derivative(const Poly<Coeff>& p, BitVec sigma) {
  require_same_genus(sigma.genus(), p.genus());
  const auto v = static_cast<Monomial::Var>(sigma.bits());
  Poly<Coeff> out(p.genus());
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.remove_one(v), c * CoeffTraits<Coeff>::from_int(e));
  }
  return out;
}

/// Evaluate at a point given by its 2^g coordinates.
template <class Coeff>
std::complex<double> evaluate(const Poly<Coeff>& p, std::span<const std::complex<double>> x) {
  if (x.size() != p.num_variables()) throw std::invalid_argument("point dimension mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t = 1.0;
    for (auto v : m.vars()) t *= x[v];
    if constexpr (std::is_same_v<Coeff, mpq_class>) {
      sum += c.get_d() * t;
    } else {
      sum += c * t;
    }
  }
  return sum;
}

ComplexPoly to_complex(const RatPoly& p);

/// Largest coefficient modulus; 0 for the zero polynomial.
double max_abs_coefficient(const ComplexPoly& p);

/// Canonical text form: terms in monomial order, "p/q*X[m]^e*...", joined
/// by " + ". The zero polynomial prints as "0".
std::string to_text(const RatPoly& p);

}  // namespace thetawb
