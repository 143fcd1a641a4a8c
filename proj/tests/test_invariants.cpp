#include <doctest.h>

#include <random>
#include <set>

#include "thetawb/invariants.hpp"
#include "thetawb/ratmatrix.hpp"

using namespace thetawb;

namespace {

RatPoly X(std::uint32_t s, int g) { return RatPoly::variable(BitVec(s, g)); }

std::size_t span_rank(const std::vector<RatPoly>& polys, int g, int n) {
  const auto monos = all_monomials(g, n);
  RatMatrix m(polys.size(), monos.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = polys[i].coefficient(monos[j]);
  return rank(m);
}

}  // namespace

TEST_CASE("quartic basis: counts, labels, invariance, independence") {
  const std::size_t expect[] = {0, 0, 5, 15, 51, 187};
  for (int g = 2; g <= 5; ++g) {
    const auto basis = quartic_basis(g);
    REQUIRE(basis.size() == expect[g]);
    CHECK(invariant_quartic_dimension(g) == expect[g]);
    CHECK(basis.front().label.kind == QuarticLabel::Kind::Q0);
    std::vector<RatPoly> polys;
    for (const auto& q : basis) {
      polys.push_back(q.poly);
      CHECK(q.poly.is_homogeneous(4));
      if (q.label.kind == QuarticLabel::Kind::QLam) {
        REQUIRE(q.label.data.size() == 3);
        const auto& d = q.label.data;
        CHECK((d[0] + d[1]) == d[2]);
        CHECK(d[0] < d[1]);
        CHECK(d[1] < d[2]);
        CHECK_FALSE(d[0].is_zero());
      }
      if (g <= 4)
        for (const auto& x : j2_generators(g)) CHECK(heis_act_poly(x, q.poly) == q.poly);
    }
    if (g <= 4) CHECK(span_rank(polys, g, 4) == basis.size());
  }
  CHECK(quartic_basis(2)[1].label.type_name() == "Qlam");
  CHECK_THROWS_AS(quartic_basis(1), std::invalid_argument);
  CHECK_THROWS_AS(quartic_basis(9), std::invalid_argument);
}

TEST_CASE("quartic basis uses literal sums over sigma") {
  const auto basis = quartic_basis(2);
  // Q0 = sum X_s^4; Q_l = sum_s X_s^2 X_{s+l}^2 (each monomial twice).
  CHECK(basis[0].poly.coefficient(Monomial({0, 0, 0, 0})) == 1);
  CHECK(basis[1].poly.coefficient(Monomial({0, 0, 1, 1})) == 2);
  CHECK(basis[4].poly == (X(0, 2) * X(1, 2) * X(2, 2) * X(3, 2)).scaled(4));
}

TEST_CASE("K-invariant cubics") {
  CHECK(k_invariant_cubics(4).size() == 51);
  CHECK(k_invariant_cubics(3).size() == 15);
  for (int g = 2; g <= 6; ++g) {
    const auto cubics = k_invariant_cubics(g);
    CHECK(cubics.size() == k_invariant_cubic_dimension(g));
    for (const auto& c : cubics) {
      REQUIRE(c.size() == 1);
      CHECK(c.terms().begin()->first.xor_sum() == 0);
      if (g <= 4)
        for (const auto& x : k_generators(g)) CHECK(heis_act_poly(x, c) == c);
    }
  }
}

TEST_CASE("quartic_from_cubic") {
  SUBCASE("examples") {
    const auto q0 = quartic_from_cubic((X(0, 3) * X(0, 3) * X(0, 3)).scaled(4));
    CHECK(q0.quartic == quartic_basis(3)[0].poly);
    CHECK(q0.coordinates[0] == 1);
    CHECK(quartic_from_cubic(RatPoly(3)).quartic.is_zero());
  }
  SUBCASE("round trip and dQ/dX_s = s.dQ/dX_0") {
    for (int g = 2; g <= 4; ++g) {
      const auto basis = quartic_basis(g);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const RatPoly f = partial_derivative(basis[j].poly, BitVec::zero(g));
        const auto sol = quartic_from_cubic(f);
        REQUIRE(sol.quartic == basis[j].poly);
        for (std::size_t i = 0; i < basis.size(); ++i) CHECK(sol.coordinates[i] == (i == j ? 1 : 0));
        for (std::uint32_t s = 0; s < (1u << g); ++s)
          REQUIRE(partial_derivative(basis[j].poly, BitVec(s, g)) ==
                  heis_act_poly(HeisElem(1, BitVec(s, g), BitVec::zero(g)), f));
      }
    }
  }
  SUBCASE("d/dX_0 is injective on the basis") {
    for (int g = 2; g <= 5; ++g) {
      std::vector<RatPoly> partials;
      for (const auto& q : quartic_basis(g)) partials.push_back(partial_derivative(q.poly, BitVec::zero(g)));
      CHECK(span_rank(partials, g, 3) == partials.size());
    }
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(quartic_from_cubic(X(0, 3) * X(0, 3) * X(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(quartic_from_cubic(X(0, 3) * X(0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(quartic_from_cubic(to_complex(X(0, 3) * X(0, 3) * X(1, 3))), std::invalid_argument);
  }
  SUBCASE("complex version agrees with the exact one") {
    std::mt19937_64 rng(21);
    const auto cubics = k_invariant_cubics(3);
    for (int t = 0; t < 10; ++t) {
      RatPoly f(3);
      for (const auto& c : cubics) f += c.scaled(static_cast<long>(rng() % 11) - 5);
      const auto exact = quartic_from_cubic(f);
      const auto approx = quartic_from_cubic(to_complex(f));
      for (std::size_t i = 0; i < exact.coordinates.size(); ++i)
        CHECK(std::abs(approx.coordinates[i] - exact.coordinates[i].get_d()) < 1e-12);
    }
  }
}

TEST_CASE("eigenspace_basis") {
  const auto b = eigenspace_basis(BitVec(0b100, 3));
  CHECK(b.plus_indices.size() == 4);
  for (const auto& s : b.plus_indices) CHECK_FALSE(s.test(2));
  for (int g = 2; g <= 5; ++g)
    for (std::uint32_t e = 1; e < (1u << g); ++e) {
      const auto eb = eigenspace_basis(BitVec(e, g));
      CHECK(eb.plus_indices.size() == (std::size_t{1} << (g - 1)));
      CHECK(eb.minus_indices.size() == (std::size_t{1} << (g - 1)));
      std::set<std::uint32_t> images;
      for (const auto& s : eb.plus_indices) images.insert(eb.reindex(s).bits());
      CHECK(images.size() == eb.plus_indices.size());
      // The reindexing is additive.
      for (const auto& s : eb.plus_indices)
        for (const auto& t : eb.plus_indices) CHECK(eb.reindex(s + t) == eb.reindex(s) + eb.reindex(t));
    }
  // Independent eta, zeta in K for g=4: the joint +1 space is 4-dimensional.
  for (std::uint32_t e = 1; e < 16; ++e)
    for (std::uint32_t z = 1; z < 16; ++z) {
      if (z == e) continue;
      const auto be = eigenspace_basis(BitVec(e, 4));
      const auto bz = eigenspace_basis(BitVec(z, 4));
      int both = 0;
      for (const auto& s : be.plus_indices) both += bz.is_plus(s);
      CHECK(both == 4);
    }
  CHECK_THROWS_AS(eigenspace_basis(BitVec(0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(b.reindex(BitVec(0b100, 3)), std::invalid_argument);
}

TEST_CASE("restriction to eigenspaces") {
  const int g = 3;
  const auto eb = eigenspace_basis(BitVec(0b100, g));
  CHECK(restrict_to_eigenspace(X(4, g) * X(5, g) * X(1, g), eb).is_zero());
  const RatPoly x0 = X(0, g);
  CHECK(restrict_to_eigenspace(x0 * x0 * x0, eb) == X(0, g - 1) * X(0, g - 1) * X(0, g - 1));
  for (std::uint32_t l = 1; l < 8; ++l) {
    const RatPoly img = restrict_to_eigenspace(x0 * X(l, g) * X(l, g), eb);
    if (eb.is_plus(BitVec(l, g))) {
      const std::uint32_t r = eb.reindex(BitVec(l, g)).bits();
      CHECK(img == X(0, g - 1) * X(r, g - 1) * X(r, g - 1));
    } else {
      CHECK(img.is_zero());
    }
  }

  SUBCASE("images of K-invariant cubics span the K-invariant cubics one genus down") {
    for (int gg = 3; gg <= 5; ++gg)
      for (std::uint32_t e = 1; e < (1u << gg); ++e) {
        const auto basis = eigenspace_basis(BitVec(e, gg));
        std::vector<RatPoly> images;
        for (const auto& c : k_invariant_cubics(gg)) {
          images.push_back(restrict_to_eigenspace(c, basis));
          for (const auto& x : k_generators(gg - 1)) CHECK(heis_act_poly(x, images.back()) == images.back());
        }
        CHECK(span_rank(images, gg - 1, 3) == k_invariant_cubic_dimension(gg - 1));
      }
  }

  SUBCASE("restriction to the -1 eigenspace kills every K-invariant cubic") {
    for (int gg = 2; gg <= 5; ++gg)
      for (std::uint32_t e = 1; e < (1u << gg); ++e) {
        const auto basis = eigenspace_basis(BitVec(e, gg));
        for (const auto& c : k_invariant_cubics(gg)) CHECK(restrict_to_minus_eigenspace(c, basis).is_zero());
      }
  }
}

TEST_CASE("combined restriction") {
  const auto c3 = combined_restriction_is_injective(3);
  CHECK(c3.injective);
  CHECK(c3.rank == 15);
  const auto c4 = combined_restriction_is_injective(4);
  CHECK(c4.injective);
  CHECK(c4.rank == 51);
  const auto c2 = combined_restriction_is_injective(2);
  CHECK(c2.outside_hypothesis);
  CHECK(c2.dimension == 5);
  CHECK(c2.rank == 4);
  CHECK_THROWS_AS(combined_restriction_is_injective(1), std::invalid_argument);
}
