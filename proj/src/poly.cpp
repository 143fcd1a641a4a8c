#include "thetawb/poly.hpp"

#include <algorithm>
#include <sstream>

namespace thetawb {

Monomial::Monomial(std::vector<Var> vars) : vars_(std::move(vars)) { std::sort(vars_.begin(), vars_.end()); }

int Monomial::exponent(Var v) const {
  auto [lo, hi] = std::equal_range(vars_.begin(), vars_.end(), v);
  return static_cast<int>(hi - lo);
}

std::vector<std::pair<Monomial::Var, int>> Monomial::exponents() const {
  std::vector<std::pair<Var, int>> out;
  for (auto v : vars_) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

std::uint32_t Monomial::xor_sum() const {
  std::uint32_t s = 0;
  for (auto v : vars_) s ^= v;
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.vars_.resize(vars_.size() + other.vars_.size());
  std::merge(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(), out.vars_.begin());
  return out;
}

Monomial Monomial::remove_one(Var v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) throw std::invalid_argument("variable not present in monomial");
  Monomial out = *this;
  out.vars_.erase(out.vars_.begin() + (it - vars_.begin()));
  return out;
}

std::vector<Monomial> all_monomials(int g, int n) {
  const std::size_t nvars = std::size_t{1} << g;
  std::vector<Monomial> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Non-decreasing index tuples, enumerated in lexicographic order.
  std::vector<Monomial::Var> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(idx);
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == nvars - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < n; ++j) idx[j] = idx[pos];
  }
  return out;
}

ComplexPoly to_complex(const RatPoly& p) {
  ComplexPoly out(p.genus());
  for (const auto& [m, c] : p.terms()) out.add_term(m, {c.get_d(), 0.0});
  return out;
}

double max_abs_coefficient(const ComplexPoly& p) {
  double best = 0.0;
  for (const auto& [m, c] : p.terms()) best = std::max(best, std::abs(c));
  return best;
}

std::string to_text(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_num().get_str() << '/' << c.get_den().get_str();
    for (const auto& [v, e] : m.exponents()) {
      os << "*X[" << v << ']';
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace thetawb
