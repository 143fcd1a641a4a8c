// Truncated power series in one variable over Q, and the Euler
// characteristic computations on symmetric products of a curve.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace thetawb {

/// c_0 + c_1 t + ... + c_N t^N, arithmetic exact modulo t^{N+1}.
class Series {
 public:
  explicit Series(int order);
  Series(std::vector<mpq_class> coeffs);

  static Series constant(const mpq_class& c, int order);
  /// The series t.
  static Series variable(int order);
  /// e^{a t}.
  static Series exponential(const mpq_class& a, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  mpq_class& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  /// Index of the first nonzero coefficient; order()+1 for zero.
  int valuation() const;

  /// Drops all terms above t^order.
  Series truncated(int order) const;
  /// Divides by t^k; requires the first k coefficients to vanish.
  Series shifted_down(int k) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const mpq_class& s, Series a);
  /// Quotient a/b after cancelling the common power of t; the result loses
  /// valuation(b) orders of precision.
  friend Series operator/(const Series& a, const Series& b);

  /// Multiplicative inverse; requires c_0 != 0.
  Series inverse() const;
  /// Integer power; negative exponents require c_0 != 0.
  Series pow(long e) const;
  /// exp of a series with c_0 = 0.
  Series exp() const;
  /// log of a series with c_0 = 1.
  Series log() const;
  /// this(inner(t)); requires inner c_0 = 0.
  Series compose(const Series& inner) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<mpq_class> c_;
};

/// t / (1 - e^{-t}) to the given order.
Series todd_series(int order);

/// tau = (t e^{-t} + e^{-t} - 1) / (t (1 - e^{-t})).
Series tau_series(int order);

/// f0 + s f1 with s^2 = 0: first-order jets used to expand functions of
/// (t - s) where s is a class of square zero.
struct DualSeries {
  Series f0;
  Series f1;

  friend DualSeries operator+(const DualSeries& a, const DualSeries& b) { return {a.f0 + b.f0, a.f1 + b.f1}; }
  friend DualSeries operator-(const DualSeries& a, const DualSeries& b) { return {a.f0 - b.f0, a.f1 - b.f1}; }
  friend DualSeries operator*(const DualSeries& a, const DualSeries& b) {
    return {a.f0 * b.f0, a.f0 * b.f1 + a.f1 * b.f0};
  }
  friend DualSeries operator/(const DualSeries& a, const DualSeries& b);
  DualSeries exp() const;
};

/// Coefficient of t^d in (t/(1-e^{-t}))^{d+1} (2 - e^{-t})^g.
std::int64_t euler_char_substitution(int g, int d);

/// Coefficient of z^d in (1+z)^g / (1-z).
std::int64_t euler_char_residue(int g, int d);

/// sum_{i<=d} C(g,i).
std::int64_t euler_char_binomial(int g, int d);

/// Coefficient of t^d in (t/(1-e^{-t}))^{d-g+1} (1 + t(2+tau))^g: the
/// Hirzebruch-Riemann-Roch integrand written through tau before the
/// simplification to the substitution form.
std::int64_t euler_char_todd_tau(int g, int d);

/// Coefficient of t^d in (t/(1-e^{-t}))^{d+1} (2 - e^{-t})^g e^{-t}.
std::int64_t euler_char_twisted_series(int g, int d);

/// C(g,d), cross-checked against euler_char_twisted_series. Throws
/// CheckFailure on disagreement.
std::int64_t euler_char_twisted(int g, int d);

/// (sum_{i<=d} C(g,i), sum_{i>d} C(g,i)).
std::pair<std::int64_t, std::int64_t> rank_formulas(int g, int d);

/// 2^{g-1} - sum_{i<=d} C(g,i).
std::int64_t polarity_defect(int g, int d);

std::int64_t binomial(int n, int k);

}  // namespace thetawb
