#include <doctest.h>

#include <random>

#include "thetawb/ratmatrix.hpp"

using namespace thetawb;

namespace {

RatMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 4) {
  std::uniform_int_distribution<int> num(-spread, spread), den(1, 3);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = mpq_class(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

RatMatrix product(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(kernel_basis(RatMatrix::identity(5)).empty());
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RatMatrix(3, 4)) == 0);
  CHECK(rank(RatMatrix()) == 0);
  CHECK(rank(RatMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == 3);
}

TEST_CASE("rank of products of known inner dimension") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 4;
    const RatMatrix m = product(random_matrix(7, r, rng, 9), random_matrix(r, 6, rng, 9));
    const std::size_t k = rank(m);
    CHECK(k <= r);
    CHECK(k == reduced_row_echelon(m).pivots.size());
  }
}

TEST_CASE("kernel_basis: rank-nullity and M v = 0") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    RatMatrix m = random_matrix(rows, cols, rng, 2);
    if (t % 3 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2;  // force a dependency
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    for (const auto& v : ker) {
      REQUIRE(v.size() == cols);
      for (std::size_t i = 0; i < rows; ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("reduced row echelon form") {
  const auto e = reduced_row_echelon(RatMatrix{{2, 4, 2}, {1, 2, 3}});
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.rref(0, 0) == 1);
  CHECK(e.rref(0, 1) == 2);
  CHECK(e.rref(0, 2) == 0);
  CHECK(e.rref(1, 2) == 1);
}

TEST_CASE("solve") {
  const RatMatrix m{{1, 1}, {1, -1}};
  const std::vector<mpq_class> b = {3, 1};
  const auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  const std::vector<mpq_class> bad = {1, 3};
  CHECK_FALSE(solve(RatMatrix{{1, 1}, {2, 2}}, bad).has_value());
  CHECK_THROWS_AS(solve(m, std::vector<mpq_class>{1}), std::invalid_argument);
}

TEST_CASE("append_rows") {
  RatMatrix a{{1, 2}};
  a.append_rows(RatMatrix{{3, 4}, {5, 6}});
  CHECK(a.rows() == 3);
  CHECK(a(2, 1) == 6);
  CHECK_THROWS_AS(a.append_rows(RatMatrix{{1, 2, 3}}), std::invalid_argument);
  RatMatrix empty;
  empty.append_rows(RatMatrix{{7, 8}});
  CHECK(empty.cols() == 2);
}
