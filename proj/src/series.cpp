#include "thetawb/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "thetawb/errors.hpp"

namespace thetawb {

namespace {

std::int64_t to_int64(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw CheckFailure(std::string(what) + " is not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw CheckFailure(std::string(what) + " overflows 64 bits");
  return q.get_num().get_si();
}

void require_range(int g, int d) {
  if (d < 0 || d > g || g > 62) throw std::invalid_argument("need 0 <= d <= g");
}

}  // namespace

Series::Series(int order) : c_(static_cast<std::size_t>(std::max(order, 0) + 1)) {
  if (order < 0) throw std::invalid_argument("negative series order");
}

Series::Series(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::constant(const mpq_class& c, int order) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::variable(int order) {
  Series s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

Series Series::exponential(const mpq_class& a, int order) {
  Series s(order);
  mpq_class term = 1;
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    term *= a;
    term /= k + 1;
  }
  return s;
}

int Series::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (c_[static_cast<std::size_t>(k)] != 0) return k;
  return order() + 1;
}

Series Series::truncated(int order) const {
  Series s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = (*this)[k];
  return s;
}

Series Series::shifted_down(int k) const {
  if (k > order()) throw std::invalid_argument("shift exceeds series order");
  for (int i = 0; i < k; ++i)
    if ((*this)[i] != 0) throw std::invalid_argument("series not divisible by the requested power of t");
  return Series(std::vector<mpq_class>(c_.begin() + k, c_.end()));
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Series& Series::operator+=(const Series& o) {
  const int n = std::min(order(), o.order());
  c_.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) (*this)[k] += o[k];
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series s(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

Series operator*(const mpq_class& s, Series a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

Series operator/(const Series& a, const Series& b) {
  const int v = b.valuation();
  if (v > b.order()) throw std::domain_error("division by the zero series");
  return a.shifted_down(v) * b.shifted_down(v).inverse();
}

Series Series::inverse() const {
  if ((*this)[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  Series inv(order());
  inv[0] = 1 / (*this)[0];
  for (int n = 1; n <= order(); ++n) {
    mpq_class acc = 0;
    for (int k = 1; k <= n; ++k) acc += (*this)[k] * inv[n - k];
    inv[n] = -acc * inv[0];
  }
  return inv;
}

Series Series::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Series result = constant(1, order());
  Series base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Series Series::exp() const {
  if ((*this)[0] != 0) throw std::domain_error("exp needs zero constant term");
  Series e(order());
  e[0] = 1;
  for (int n = 1; n <= order(); ++n) {
    mpq_class acc = 0;
    for (int k = 1; k <= n; ++k) acc += k * (*this)[k] * e[n - k];
    e[n] = acc / n;
  }
  return e;
}

Series Series::log() const {
  if ((*this)[0] != 1) throw std::domain_error("log needs constant term 1");
  Series l(order());
  for (int n = 1; n <= order(); ++n) {
    mpq_class acc = n * (*this)[n];
    for (int k = 1; k < n; ++k) acc -= k * l[k] * (*this)[n - k];
    l[n] = acc / n;
  }
  return l;
}

Series Series::compose(const Series& inner) const {
  if (inner[0] != 0) throw std::domain_error("composition needs inner constant term 0");
  const int n = std::min(order(), inner.order());
  Series result(n);
  for (int k = n; k >= 0; --k) {
    result = result * inner.truncated(n);
    result[0] += (*this)[k];
  }
  return result;
}

Series todd_series(int order) {
  Series one_minus_exp = Series::constant(1, order + 1) - Series::exponential(-1, order + 1);
  return one_minus_exp.shifted_down(1).inverse();
}

Series tau_series(int order) {
  const int n = order + 2;
  const Series t = Series::variable(n);
  const Series e = Series::exponential(-1, n);
  const Series one = Series::constant(1, n);
  return (t * e + e - one) / (t * (one - e));
}

DualSeries operator/(const DualSeries& a, const DualSeries& b) {
  return {a.f0 / b.f0, (a.f1 * b.f0 - a.f0 * b.f1) / (b.f0 * b.f0)};
}

DualSeries DualSeries::exp() const {
  Series e = f0.exp();
  return {e, f1 * e};
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b.get_si();
}

std::int64_t euler_char_substitution(int g, int d) {
  require_range(g, d);
  const int n = d + 2;
  const Series two_minus_exp = Series::constant(2, n) - Series::exponential(-1, n);
  const Series integrand = todd_series(n).pow(d + 1) * two_minus_exp.pow(g);
  return to_int64(integrand[d], "substitution-route Euler characteristic");
}

std::int64_t euler_char_residue(int g, int d) {
  require_range(g, d);
  const int n = d + 2;
  const Series z = Series::variable(n);
  const Series one = Series::constant(1, n);
  const Series integrand = (one + z).pow(g) * (one - z).inverse();
  return to_int64(integrand[d], "residue-route Euler characteristic");
}

std::int64_t euler_char_binomial(int g, int d) {
  require_range(g, d);
  std::int64_t s = 0;
  for (int i = 0; i <= d; ++i) s += binomial(g, i);
  return s;
}

std::int64_t euler_char_todd_tau(int g, int d) {
  require_range(g, d);
  const int n = d + 2;
  const Series t = Series::variable(n);
  const Series factor = Series::constant(1, n) + t * (Series::constant(2, n) + tau_series(n));
  const Series integrand = todd_series(n).pow(d - g + 1) * factor.pow(g);
  return to_int64(integrand[d], "Todd-route Euler characteristic");
}

std::int64_t euler_char_twisted_series(int g, int d) {
  require_range(g, d);
  const int n = d + 2;
  const Series two_minus_exp = Series::constant(2, n) - Series::exponential(-1, n);
  const Series integrand = todd_series(n).pow(d + 1) * two_minus_exp.pow(g) * Series::exponential(-1, n);
  return to_int64(integrand[d], "twisted Euler characteristic");
}

std::int64_t euler_char_twisted(int g, int d) {
  const std::int64_t closed = binomial(g, d);
  const std::int64_t via_series = euler_char_twisted_series(g, d);
  if (closed != via_series) {
    throw CheckFailure("twisted Euler characteristic mismatch at g=" + std::to_string(g) +
                       " d=" + std::to_string(d));
  }
  return closed;
}

std::pair<std::int64_t, std::int64_t> rank_formulas(int g, int d) {
  if (d < 0 || d > g - 1) throw std::invalid_argument("need 0 <= d <= g-1");
  const std::int64_t q = euler_char_binomial(g, d);
  return {q, (std::int64_t{1} << g) - q};
}

std::int64_t polarity_defect(int g, int d) {
  if (d < 0 || d > g - 1) throw std::invalid_argument("need 0 <= d <= g-1");
  return (std::int64_t{1} << (g - 1)) - euler_char_binomial(g, d);
}

}  // namespace thetawb
