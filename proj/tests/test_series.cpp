#include <doctest.h>

#include <random>

#include "thetawb/errors.hpp"
#include "thetawb/series.hpp"

using namespace thetawb;

namespace {

Series random_series(int order, std::mt19937_64& rng, bool unit_constant = false) {
  Series s(order);
  for (int k = 0; k <= order; ++k) {
    mpq_class q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
    q.canonicalize();
    s[k] = q;
  }
  if (unit_constant) s[0] = 1;
  return s;
}

// Pascal's triangle, independent of the library binomial.
std::vector<std::vector<std::int64_t>> pascal(int n) {
  std::vector<std::vector<std::int64_t>> p(n + 1);
  for (int i = 0; i <= n; ++i) {
    p[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) p[i][j] = p[i - 1][j - 1] + p[i - 1][j];
  }
  return p;
}

}  // namespace

TEST_CASE("series ring operations") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Series a = random_series(8, rng), b = random_series(8, rng), c = random_series(8, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a) == Series(8));
    const Series u = random_series(8, rng, true);
    CHECK(u * u.inverse() == Series::constant(1, 8));
    CHECK(u.pow(-2) * u.pow(2) == Series::constant(1, 8));
    CHECK(u.log().exp() == u);
    Series z = random_series(8, rng);
    z[0] = 0;
    CHECK(z.exp().log() == z);
  }
  const Series t = Series::variable(5);
  CHECK(t.valuation() == 1);
  CHECK(Series(5).valuation() == 6);
  CHECK((t * t).shifted_down(2) == Series::constant(1, 3));
  CHECK(Series::exponential(1, 6).compose(t) == Series::exponential(1, 6).truncated(5));
  // exp(2t) composed with t^2 is exp(2 t^2).
  const Series sq = t * t;
  const Series e = Series::exponential(2, 5).compose(sq);
  CHECK(e[0] == 1);
  CHECK(e[1] == 0);
  CHECK(e[2] == 2);
  CHECK(e[4] == 2);
}

TEST_CASE("series errors") {
  CHECK_THROWS_AS(Series(-1), std::invalid_argument);
  CHECK_THROWS_AS(Series::variable(3).inverse(), std::domain_error);
  CHECK_THROWS_AS(Series::constant(1, 3).exp(), std::domain_error);
  CHECK_THROWS_AS(Series::constant(2, 3).log(), std::domain_error);
  CHECK_THROWS_AS(Series::constant(1, 3).compose(Series::constant(1, 3)), std::domain_error);
  CHECK_THROWS_AS(Series::constant(1, 3).shifted_down(1), std::invalid_argument);
  CHECK_THROWS_AS(Series::constant(1, 3) / Series(3), std::domain_error);
}

TEST_CASE("Todd and tau series") {
  const Series td = todd_series(6);
  CHECK(td[0] == 1);
  CHECK(td[1] == mpq_class(1, 2));
  CHECK(td[2] == mpq_class(1, 12));
  CHECK(td[3] == 0);
  CHECK(td[4] == mpq_class(-1, 720));
  CHECK(td[6] == mpq_class(1, 30240));

  // tau = -td'/td, i.e. the s-derivative of (t-s)/(1-e^{-(t-s)}) is td * tau.
  const int n = 10;
  const DualSeries x{Series::variable(n), Series::constant(-1, n)};
  const DualSeries one{Series::constant(1, n), Series(n)};
  const DualSeries neg_x{-x.f0, -x.f1};
  const DualSeries jet = x / (one - neg_x.exp());
  const Series tau = tau_series(n);
  const Series td_n = todd_series(n);
  const Series expect = td_n * tau;
  for (int k = 0; k <= 6; ++k) {
    CHECK(jet.f0[k] == td_n[k]);
    CHECK(jet.f1[k] == expect[k]);
  }
  CHECK(tau[0] == mpq_class(-1, 2));
}

TEST_CASE("Euler characteristic routes agree with the binomial sum") {
  const auto p = pascal(20);
  for (int g = 1; g <= 14; ++g)
    for (int d = 0; d <= g - 1; ++d) {
      std::int64_t expect = 0;
      for (int i = 0; i <= d; ++i) expect += p[g][i];
      CAPTURE(g);
      CAPTURE(d);
      REQUIRE(euler_char_binomial(g, d) == expect);
      REQUIRE(euler_char_substitution(g, d) == expect);
      REQUIRE(euler_char_residue(g, d) == expect);
      REQUIRE(euler_char_todd_tau(g, d) == expect);
      REQUIRE(euler_char_twisted(g, d) == p[g][d]);
    }
  CHECK(euler_char_substitution(4, 2) == 11);
  CHECK(euler_char_twisted(4, 2) == 6);
  CHECK(euler_char_residue(3, 1) == 4);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(30, 15) == 155117520);
  CHECK_THROWS_AS(euler_char_substitution(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(euler_char_residue(3, -1), std::invalid_argument);
}

TEST_CASE("rank formulas and polarity defect") {
  CHECK(rank_formulas(4, 1) == std::pair<std::int64_t, std::int64_t>{5, 11});
  CHECK(polarity_defect(4, 1) == 3);
  CHECK(polarity_defect(3, 1) == 0);
  for (int g = 1; g <= 12; ++g)
    for (int d = 0; d <= g - 1; ++d) {
      const auto [q, n] = rank_formulas(g, d);
      CHECK(q + n == (std::int64_t{1} << g));
      CHECK(polarity_defect(g, d) == -polarity_defect(g, g - 1 - d));
    }
  CHECK_THROWS_AS(rank_formulas(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(polarity_defect(3, -1), std::invalid_argument);
}
