#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thetawb/verlinde.hpp"

using namespace thetawb;

namespace {

long double verlinde_oracle(int g, int k) {
  const long double pi = std::numbers::pi_v<long double>;
  long double s = 0;
  for (int j = 1; j <= k + 1; ++j) s += std::pow(std::sin(j * pi / (k + 2)), static_cast<long double>(2 - 2 * g));
  return std::pow((k + 2) / 2.0L, static_cast<long double>(g - 1)) * s;
}

}  // namespace

TEST_CASE("Verlinde numbers") {
  CHECK(verlinde_su2(4, 3) == 800);
  CHECK(verlinde_su2(2, 2) == 10);
  CHECK(verlinde_su2(3, 2) == 36);
  for (int g = 2; g <= 10; ++g) {
    CHECK(verlinde_su2(g, 1) == mpz_class(1) << g);
    CHECK(verlinde_su2(g, 2) == (mpz_class(1) << (g - 1)) * ((mpz_class(1) << g) + 1));
  }
  for (int g = 2; g <= 5; ++g)
    for (int k = 1; k <= 8; ++k) {
      const long double o = verlinde_oracle(g, k);
      CHECK(verlinde_su2(g, k) == static_cast<long>(std::llround(o)));
    }
  const auto r = verlinde_su2_detailed(6, 20);
  CHECK(r.residual < std::ldexp(1.0, -32));
  CHECK(r.precision_bits >= 64);
  CHECK(verlinde_su2_detailed(10, 64).value > 0);
}

TEST_CASE("Verlinde argument checks") {
  CHECK_THROWS_AS(verlinde_su2(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(verlinde_su2(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(verlinde_su2(3, 65), std::invalid_argument);
}

TEST_CASE("binomial dimension counts") {
  CHECK(sym_power_dim(2, 4) == 35);
  CHECK(sym_power_dim(3, 4) == 330);
  CHECK(sym_power_dim(4, 3) == 816);
  CHECK(invariant_quartic_count(4) == 41);
  CHECK(invariant_quartic_count(3) == 14);
  CHECK(invariant_quartic_count(2) == 5);
  CHECK(even_theta_dim(2, 2) == 4);
  CHECK(even_theta_dim(3, 4) == 36);
  CHECK_THROWS_AS(even_theta_dim(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(even_theta_dim(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(invariant_quartic_count(1), std::invalid_argument);
  CHECK_THROWS_AS(sym_power_dim(-1, 2), std::invalid_argument);
}
