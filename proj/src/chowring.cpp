#include "thetawb/chowring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "thetawb/errors.hpp"
#include "thetawb/series.hpp"

namespace thetawb {

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

mpz_class ipow(long base, int e) {
  mpz_class r;
  mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

mpz_class as_integer(const mpq_class& q, const std::string& what) {
  if (q.get_den() != 1) throw CheckFailure(what + " is not an integer: " + q.get_str());
  return q.get_num();
}

void require_sym_range(int g, int d) {
  if (g < 1 || d < 1 || d > g) throw std::invalid_argument("need 1 <= d <= g");
}

}  // namespace

// ---------------------------------------------------------------------------
// JacClass

JacClass::JacClass(int g) : g_(g), c_(static_cast<std::size_t>(g + 1)) {
  if (g < 0) throw std::invalid_argument("negative genus");
}

JacClass::JacClass(int g, std::vector<mpq_class> coeffs) : JacClass(g) {
  if (coeffs.size() > c_.size()) throw std::invalid_argument("class has terms above theta^g");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

JacClass JacClass::constant(int g, const mpq_class& c) { return theta_power(g, 0, c); }

JacClass JacClass::theta_power(int g, int k, const mpq_class& c) {
  JacClass x(g);
  if (k <= g) x[k] = c;
  return x;
}

JacClass& JacClass::operator+=(const JacClass& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (int k = 0; k <= g_; ++k) (*this)[k] += o[k];
  return *this;
}

JacClass& JacClass::operator-=(const JacClass& o) {
  if (o.g_ != g_) throw std::invalid_argument("genus mismatch");
  for (int k = 0; k <= g_; ++k) (*this)[k] -= o[k];
  return *this;
}

JacClass operator*(const JacClass& a, const JacClass& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("genus mismatch");
  JacClass out(a.g_);
  for (int i = 0; i <= a.g_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= a.g_; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

JacClass operator*(const mpq_class& s, JacClass a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

JacClass JacClass::inverse() const {
  Series inv = Series(c_).inverse();
  return JacClass(g_, inv.coefficients());
}

mpq_class JacClass::integral() const { return (*this)[g_] * mpq_class(factorial(g_)); }

JacClass jac_chern_character_Q1(int g) {
  if (g < 1) throw std::invalid_argument("genus must be positive");
  JacClass linear(g);
  linear[0] = g + 1;
  if (g >= 1) linear[1] = -4;
  return linear * JacClass(g, Series::exponential(2, g).coefficients());
}

std::vector<JacClass> power_sums_from_character(const JacClass& ch) {
  const int g = ch.genus();
  std::vector<JacClass> p;
  for (int n = 1; n <= g; ++n) p.push_back(JacClass::theta_power(g, n, ch[n] * mpq_class(factorial(n))));
  return p;
}

std::vector<JacClass> newton_chern(const std::vector<JacClass>& power_sums) {
  if (power_sums.empty()) throw std::invalid_argument("need at least p_1");
  const int g = power_sums.front().genus();
  const int top = static_cast<int>(power_sums.size());
  std::vector<JacClass> c{JacClass::constant(g, 1)};
  for (int n = 1; n <= top; ++n) {
    JacClass acc(g);
    for (int i = 1; i <= n; ++i) {
      const JacClass term = c[static_cast<std::size_t>(n - i)] * power_sums[static_cast<std::size_t>(i - 1)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    c.push_back(mpq_class(1, n) * acc);
  }
  return c;
}

std::vector<JacClass> newton_power_sums(const std::vector<JacClass>& chern) {
  if (chern.empty()) throw std::invalid_argument("need c_0");
  const int g = chern.front().genus();
  const int top = static_cast<int>(chern.size()) - 1;
  std::vector<JacClass> p;
  for (int n = 1; n <= top; ++n) {
    JacClass acc = mpq_class(n % 2 == 1 ? n : -n) * chern[static_cast<std::size_t>(n)];
    for (int i = 1; i < n; ++i) {
      const JacClass term = chern[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(n - i - 1)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p.push_back(acc);
  }
  (void)g;
  return p;
}

JacClass total_chern(const std::vector<JacClass>& chern) {
  JacClass total(chern.front().genus());
  for (const auto& c : chern) total += c;
  return total;
}

JacClass total_chern_via_exp(const JacClass& ch) {
  const int g = ch.genus();
  Series log_c(g);
  for (int n = 1; n <= g; ++n) {
    mpq_class term = ch[n] * mpq_class(factorial(n - 1));
    log_c[n] = n % 2 == 1 ? term : mpq_class(-term);
  }
  return JacClass(g, log_c.exp().coefficients());
}

mpz_class top_chern_Q1(int g) {
  const auto c = newton_chern(power_sums_from_character(jac_chern_character_Q1(g)));
  return as_integer(c.back().integral(), "c_g(Q_1)");
}

mpz_class top_chern_Q1_via_exp(int g) {
  const JacClass total = total_chern_via_exp(jac_chern_character_Q1(g));
  return as_integer(JacClass::theta_power(g, g, total[g]).integral(), "c_g(Q_1)");
}

SegreCheck segre_equals_chern(const JacClass& ch_quotient, const mpq_class& rank_total) {
  const int g = ch_quotient.genus();
  const JacClass c_q = total_chern(newton_chern(power_sums_from_character(ch_quotient)));
  const JacClass ch_sub = JacClass::constant(g, rank_total) - ch_quotient;
  const JacClass c_n = total_chern(newton_chern(power_sums_from_character(ch_sub)));
  const JacClass s_n = c_n.inverse();

  SegreCheck out;
  out.segre_top = JacClass::theta_power(g, g, s_n[g]).integral();
  out.chern_top = JacClass::theta_power(g, g, c_q[g]).integral();
  out.equal = out.segre_top == out.chern_top;
  return out;
}

SegreCheck segre_equals_chern(int g) {
  return segre_equals_chern(jac_chern_character_Q1(g), mpq_class(mpz_class(1) << g));
}

// ---------------------------------------------------------------------------
// SymClass

SymClass::SymClass(int g, int d) : g_(g), d_(d), m_(std::min(g, d)) {
  if (g < 1 || d < 1) throw std::invalid_argument("need g >= 1 and d >= 1");
  c_.resize(static_cast<std::size_t>((m_ + 1) * (d_ + 1)));
}

std::size_t SymClass::slot(int a, int b) const { return static_cast<std::size_t>(a * (d_ + 1) + b); }

void SymClass::add(int a, int b, const mpq_class& c) {
  // Classes of degree above d, or with a > g, vanish.
  if (a < 0 || b < 0 || a > m_ || a + b > d_) return;
  c_[slot(a, b)] += c;
}

mpq_class SymClass::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a > m_ || a + b > d_) return 0;
  return c_[slot(a, b)];
}

SymClass SymClass::eta_power(int g, int d, int k, const mpq_class& c) {
  if (k < 0) throw std::invalid_argument("negative power");
  SymClass x(g, d);
  x.add(0, k, c);
  return x;
}

SymClass SymClass::elementary(int g, int d, int a, const mpq_class& c) {
  if (a < 0) throw std::invalid_argument("negative index");
  SymClass x(g, d);
  x.add(a, 0, c);
  return x;
}

SymClass SymClass::s_power(int g, int d, int k, const mpq_class& c) {
  return elementary(g, d, k, c * mpq_class(factorial(k)));
}

void SymClass::require_compatible(const SymClass& o) const {
  if (o.g_ != g_ || o.d_ != d_) throw std::invalid_argument("SymClass (g,d) mismatch");
}

SymClass& SymClass::operator+=(const SymClass& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SymClass& SymClass::operator-=(const SymClass& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SymClass operator*(const SymClass& x, const SymClass& y) {
  x.require_compatible(y);
  SymClass out(x.g_, x.d_);
  for (int a = 0; a <= x.m_; ++a)
    for (int b = 0; a + b <= x.d_; ++b) {
      const mpq_class& u = x.c_[x.slot(a, b)];
      if (u == 0) continue;
      for (int a2 = 0; a2 <= y.m_ && a + a2 <= x.m_; ++a2)
        for (int b2 = 0; a + a2 + b + b2 <= x.d_; ++b2) {
          const mpq_class& v = y.c_[y.slot(a2, b2)];
          if (v != 0) out.add(a + a2, b + b2, u * v * mpq_class(choose(a + a2, a)));
        }
    }
  return out;
}

SymClass operator*(const mpq_class& s, SymClass a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

SymClass SymClass::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  SymClass r = constant(g_, d_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

mpq_class sym_integrate(const SymClass& c) {
  mpq_class total = 0;
  for (int a = 0; a <= std::min(c.genus(), c.dim()); ++a)
    total += c.coeff(a, c.dim() - a) * mpq_class(choose(c.genus(), a));
  return total;
}

SymClass c1_diagonal(int g, int d) {
  require_sym_range(g, d);
  return SymClass::eta_power(g, d, 1, 2 * (d + g - 1)) - SymClass::s_power(g, d, 1, 2);
}

SymClass c1_Lx(int g, int d) {
  const SymClass result = SymClass::eta_power(g, d, 1, 2 * g - 2 + 2 * d) - c1_diagonal(g, d);
  if (!(result == SymClass::s_power(g, d, 1, 2))) {
    throw CheckFailure("c_1(L_x) != 2s at g=" + std::to_string(g) + " d=" + std::to_string(d));
  }
  return result;
}

SymClass c1_tangent(int g, int d) {
  require_sym_range(g, d);
  // (1+eta)^e contributes e*eta; each (1 + eta - sigma_i) contributes eta - sigma_i.
  SymClass c1 = SymClass::eta_power(g, d, 1, d - 2 * g + 1);
  c1 += SymClass::eta_power(g, d, 1, g);
  c1 -= SymClass::s_power(g, d, 1, 1);
  return c1;
}

mpz_class ample_self_intersection_closed_form(int g, int d) {
  require_sym_range(g, d);
  return factorial(g) / factorial(g - d) + ipow(d + 1, d) - ipow(g, d);
}

mpz_class ample_self_intersection(int g, int d) {
  const SymClass canonical = mpq_class(-1) * c1_tangent(g, d);
  const SymClass ample = c1_Lx(g, d) - canonical;
  return as_integer(sym_integrate(ample.pow(d)), "self-intersection");
}

mpz_class ample_self_intersection_expanded(int g, int d) {
  require_sym_range(g, d);
  const long c = d - g + 1;
  mpz_class total = 0;
  for (int a = 0; a <= d; ++a) total += choose(d, a) * ipow(c, d - a) * factorial(g) / factorial(g - a);
  return total;
}

mpz_class euler_char_hrr(int g, int d, bool twisted) {
  require_sym_range(g, d);
  // Power series in eta become SymClass polynomials; sigma-dependence enters
  // only through prod(1 + x sigma_i) = sum_a x^a e_a.
  auto from_series = [&](const Series& f) {
    SymClass out(g, d);
    for (int k = 0; k <= d; ++k) out += SymClass::eta_power(g, d, k, f[k]);
    return out;
  };
  auto product_of = [&](const Series& x) {
    SymClass out(g, d);
    const Series xk_base = x;
    Series xk = Series::constant(1, d);
    for (int a = 0; a <= std::min(g, d); ++a) {
      out += SymClass::elementary(g, d, a) * from_series(xk);
      xk = xk * xk_base;
    }
    return out;
  };
  const SymClass td = from_series(todd_series(d).pow(d - g + 1)) * product_of(tau_series(d));
  SymClass ch = product_of(Series::constant(2, d));
  if (twisted) ch = ch * from_series(Series::exponential(-1, d));
  return as_integer(sym_integrate(td * ch), "chi");
}

}  // namespace thetawb
