// Intersection rings: Q[theta]/(theta^{g+1}) on the Jacobian, and the
// symmetric subring of H^*(S^d C) generated by eta and s = sigma_1 + ... + sigma_g.
#pragma once

#include <vector>

#include <gmpxx.h>

namespace thetawb {

/// sum_k c_k theta^k, truncated above theta^g. The integral of theta^g is g!.
class JacClass {
 public:
  explicit JacClass(int g);
  JacClass(int g, std::vector<mpq_class> coeffs);

  static JacClass constant(int g, const mpq_class& c);
  static JacClass theta_power(int g, int k, const mpq_class& c = 1);

  int genus() const { return g_; }
  const mpq_class& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  mpq_class& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  JacClass& operator+=(const JacClass& o);
  JacClass& operator-=(const JacClass& o);
  friend JacClass operator+(JacClass a, const JacClass& b) { return a += b; }
  friend JacClass operator-(JacClass a, const JacClass& b) { return a -= b; }
  friend JacClass operator*(const JacClass& a, const JacClass& b);
  friend JacClass operator*(const mpq_class& s, JacClass a);

  /// Inverse of a class with nonzero degree-0 part.
  JacClass inverse() const;

  /// c_g * g!.
  mpq_class integral() const;

  friend bool operator==(const JacClass&, const JacClass&) = default;

 private:
  int g_;
  std::vector<mpq_class> c_;
};

/// (g+1 - 4 theta) e^{2 theta}.
JacClass jac_chern_character_Q1(int g);

/// Power sums p_n = n! ch_n of the Chern roots, n = 1..g.
std::vector<JacClass> power_sums_from_character(const JacClass& ch);

/// Newton's recursion c_n = (1/n) sum_{i=1}^n (-1)^{i-1} c_{n-i} p_i.
/// Input p_1..p_g; output c_0..c_g with c_0 = 1.
std::vector<JacClass> newton_chern(const std::vector<JacClass>& power_sums);

/// Power sums back from c_0..c_g:
/// p_n = sum_{i=1}^{n-1} (-1)^{i-1} c_i p_{n-i} + (-1)^{n-1} n c_n.
std::vector<JacClass> newton_power_sums(const std::vector<JacClass>& chern);

/// Total Chern class 1 + c_1 + ... + c_g as one class.
JacClass total_chern(const std::vector<JacClass>& chern);

/// Total Chern class from the Chern character via exp(sum (-1)^{n-1} (n-1)! ch_n).
JacClass total_chern_via_exp(const JacClass& ch);

/// Integral of c_g(Q_1) via Newton's recursion.
mpz_class top_chern_Q1(int g);

/// Same integer through exp/log of the Chern character.
mpz_class top_chern_Q1_via_exp(int g);

struct SegreCheck {
  mpq_class segre_top;  ///< integral of s_g(N_1)
  mpq_class chern_top;  ///< integral of c_g(Q_1)
  bool equal = false;
};

/// Computes s(N) = c(N)^{-1} from ch(N) = rank_total - ch(Q) and compares
/// its top degree with c_g(Q) computed from ch(Q).
SegreCheck segre_equals_chern(const JacClass& ch_quotient, const mpq_class& rank_total);

/// The d = 1 case on the Jacobian: trivial bundle of rank 2^g.
SegreCheck segre_equals_chern(int g);

/// Symmetric classes on S^d C as sums of c_{a,b} e_a eta^b, where
/// e_a = e_a(sigma_1..sigma_g), a <= min(g,d), a + b <= d. Since
/// sigma_i^2 = 0, e_a e_c = C(a+c,a) e_{a+c}; s = e_1 and s^k = k! e_k.
class SymClass {
 public:
  SymClass(int g, int d);

  static SymClass eta_power(int g, int d, int k, const mpq_class& c = 1);
  static SymClass s_power(int g, int d, int k, const mpq_class& c = 1);
  static SymClass elementary(int g, int d, int a, const mpq_class& c = 1);
  static SymClass constant(int g, int d, const mpq_class& c) { return eta_power(g, d, 0, c); }

  int genus() const { return g_; }
  int dim() const { return d_; }
  /// Coefficient of e_a eta^b; zero outside the stored range.
  mpq_class coeff(int a, int b) const;

  SymClass& operator+=(const SymClass& o);
  SymClass& operator-=(const SymClass& o);
  friend SymClass operator+(SymClass a, const SymClass& b) { return a += b; }
  friend SymClass operator-(SymClass a, const SymClass& b) { return a -= b; }
  friend SymClass operator*(const SymClass& x, const SymClass& y);
  friend SymClass operator*(const mpq_class& s, SymClass a);
  SymClass pow(int e) const;

  friend bool operator==(const SymClass&, const SymClass&) = default;

 private:
  std::size_t slot(int a, int b) const;
  void add(int a, int b, const mpq_class& c);
  void require_compatible(const SymClass& o) const;

  int g_;
  int d_;
  int m_;
  std::vector<mpq_class> c_;
};

/// Degree-d part evaluated by e_a eta^{d-a} = C(g,a).
mpq_class sym_integrate(const SymClass& c);

/// 2(d+g-1) eta - 2 s.
SymClass c1_diagonal(int g, int d);

/// c_1(S^d(K x^2)) - c_1(diagonal) = (2g-2+2d) eta - c1_diagonal. Throws
/// CheckFailure unless the result is exactly 2s.
SymClass c1_Lx(int g, int d);

/// Degree-1 part of (1+eta)^{d-2g+1} prod_i (1 + eta - sigma_i).
SymClass c1_tangent(int g, int d);

/// g!/(g-d)! + (d+1)^d - g^d.
mpz_class ample_self_intersection_closed_form(int g, int d);

/// Integral of c_1(L_x K^{-1})^d with c_1(K) = -c1_tangent, computed in the
/// ring. Agrees with the closed form for d <= 2 only.
mpz_class ample_self_intersection(int g, int d);

/// sum_a C(d,a) c^{d-a} g!/(g-a)! with c = d-g+1: the same integral expanded
/// by hand, for cross-checking the ring arithmetic.
mpz_class ample_self_intersection_expanded(int g, int d);

/// chi(L_x) and chi(L_x(-p)) by Hirzebruch-Riemann-Roch inside SymClass:
/// td = (eta/(1-e^-eta))^{d-g+1} prod(1 + sigma_i tau), ch(L_x) = prod(1 + 2 sigma_i).
mpz_class euler_char_hrr(int g, int d, bool twisted = false);

}  // namespace thetawb
