#include "thetawb/acceptance.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "thetawb/chowring.hpp"
#include "thetawb/heisenberg.hpp"
#include "thetawb/invariant_subspace.hpp"
#include "thetawb/invariants.hpp"
#include "thetawb/series.hpp"
#include "thetawb/thetanum.hpp"
#include "thetawb/verlinde.hpp"

namespace thetawb::acceptance {

namespace {

// Accumulates mismatches; only the first few are kept for the report.
class Ledger {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 4) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success + " (" + std::to_string(checks_) + " checks)";
    return std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + notes_.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::string str(const mpz_class& v) { return v.get_str(); }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(2) << std::scientific << v;
  return os.str();
}

// Pascal's triangle, independent of every library binomial.
std::vector<std::vector<std::int64_t>> pascal(int n) {
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

std::string crit1(Ledger& L) {
  const std::array<long, 6> table = {32, 384, 4096, 56320, 872448, 15368192};
  for (int g = 3; g <= 8; ++g) {
    const mpz_class v = top_chern_Q1(g);
    L.check(v == table[g - 3], "g=" + std::to_string(g) + " gave " + str(v));
    L.check(top_chern_Q1_via_exp(g) == v, "exp route differs at g=" + std::to_string(g));
  }
  return "c_g(Q1) = 32, 384, 4096, 56320, 872448, 15368192 for g=3..8";
}

std::string crit2(Ledger& L) {
  const auto c = pascal(12);
  for (int g = 1; g <= 12; ++g)
    for (int d = 1; d <= g; ++d) {
      std::int64_t expect = 0;
      for (int i = 0; i <= d; ++i) expect += c[g][i];
      const std::string at = "(" + std::to_string(g) + "," + std::to_string(d) + ")";
      L.check(euler_char_substitution(g, d) == expect, "substitution " + at);
      L.check(euler_char_residue(g, d) == expect, "residue " + at);
      L.check(euler_char_binomial(g, d) == expect, "binomial " + at);
      L.check(euler_char_twisted(g, d) == c[g][d], "twisted " + at);
    }
  L.check(euler_char_substitution(4, 2) == 11, "spot value (4,2)");
  return "three routes agree with sum C(g,i), twisted = C(g,d), 1<=d<=g<=12; (4,2) -> 11";
}

std::string crit3(Ledger& L) {
  for (int g = 2; g <= 5; ++g) {
    const std::size_t expect = ((std::size_t{1} << g) + 1) * ((std::size_t{1} << (g - 1)) + 1) / 3;
    L.check(quartic_basis(g).size() == expect, "quartic basis g=" + std::to_string(g));
  }
  L.check(k_invariant_cubics(4).size() == 51, "K-invariant cubics g=4");
  L.check(k_invariant_cubics(3).size() == 15, "K-invariant cubics g=3");
  L.check(invariant_subspace(k_generators(4), 3, 4).size() == 51, "orbit analysis g=4");
  L.check(invariant_subspace(k_generators(3), 3, 3).size() == 15, "orbit analysis g=3");
  L.check(sym_power_dim(4, 3) == 816 && all_monomials(4, 3).size() == 816, "dim S^3 V g=4");
  L.check(sym_power_dim(3, 3) == 120 && all_monomials(3, 3).size() == 120, "dim S^3 V g=3");
  return "quartic basis 5, 15, 51, 187; K-cubics 15, 51; dim S^3 V 120, 816";
}

std::string crit4(Ledger& L) {
  for (int g = 2; g <= 4; ++g) {
    const BitVec zero = BitVec::zero(g);
    for (const auto& q : quartic_basis(g)) {
      const RatPoly f = partial_derivative(q.poly, zero);
      L.check(quartic_from_cubic(f).quartic == q.poly, "round trip g=" + std::to_string(g) + " " + q.label.type_name());
      for (std::uint32_t s = 0; s < (1u << g); ++s) {
        const BitVec sigma(s, g);
        const HeisElem x(1, sigma, zero);
        L.check(partial_derivative(q.poly, sigma) == heis_act_poly(x, f),
                "partials g=" + std::to_string(g) + " sigma=" + std::to_string(s));
      }
    }
  }
  return "quartic_from_cubic(dQ/dX_0) = Q and dQ/dX_s = s.dQ/dX_0 over the basis, g=2..4";
}

std::string crit5(Ledger& L) {
  const auto c3 = combined_restriction_is_injective(3);
  const auto c4 = combined_restriction_is_injective(4);
  L.check(c3.injective && c3.rank == 15, "g=3 rank " + std::to_string(c3.rank));
  L.check(c4.injective && c4.rank == 51, "g=4 rank " + std::to_string(c4.rank));
  return "rank " + std::to_string(c3.rank) + "/15 (g=3), " + std::to_string(c4.rank) + "/51 (g=4)";
}

std::string crit6(Ledger& L) {
  const auto v43 = verlinde_su2_detailed(4, 3);
  L.check(v43.value == 800, "verlinde(4,3) = " + str(v43.value));
  for (int g = 2; g <= 10; ++g) L.check(verlinde_su2(g, 1) == (mpz_class(1) << g), "verlinde(g,1) at g=" + std::to_string(g));
  L.check(invariant_quartic_count(4) == 41, "invariant_quartic_count(4)");
  L.check(even_theta_dim(3, 6) == 112, "even_theta_dim(3,6)");
  L.check(sym_power_dim(4, 3) - v43.value == 16, "816 - 800");
  L.check(k_invariant_cubic_dimension(4) * 16 == 816, "51*16");
  L.check(50 * 16 == v43.value, "50*16");
  return "verlinde(4,3) = 800 (residual " + sci(v43.residual) + "), verlinde(g,1) = 2^g, 41, 112, 816-800 = 16";
}

std::string crit7(Ledger& L) {
  int mismatches = 0;
  int pairs = 0;
  for (int g = 1; g <= 8; ++g)
    for (int d = 1; d <= g; ++d) {
      ++pairs;
      const mpz_class ring = ample_self_intersection(g, d);
      const mpz_class closed = ample_self_intersection_closed_form(g, d);
      L.check(ring == ample_self_intersection_expanded(g, d), "ring vs expansion at (" + std::to_string(g) + "," +
                                                                  std::to_string(d) + ")");
      if (ring != closed) ++mismatches;
      L.check(ring == closed, "(" + std::to_string(g) + "," + std::to_string(d) + "): ring " + str(ring) +
                                  " vs closed form " + str(closed));
    }
  for (int g = 5; g <= 8; ++g)
    for (int d = 1; d <= g; ++d) {
      const bool covered = d == 1 || d == 2 || d == g - 1 || d == g;
      if (covered || ample_self_intersection_closed_form(g, d) >= 0) continue;
      L.check(ample_self_intersection(g, d) < 0,
              "not negative at (" + std::to_string(g) + "," + std::to_string(d) + ")");
    }
  return "ring integral equals closed form at " + std::to_string(pairs - mismatches) + "/" + std::to_string(pairs) +
         " pairs";
}

std::string crit8(Ledger& L) {
  const SiegelTau tau2 = random_tau(2, kTauSeedG2);
  const SiegelTau tau3 = random_tau(3, kTauSeedG3);
  std::vector<RatPoly> quartics;
  for (const auto& q : quartic_basis(2)) quartics.push_back(q.poly);
  std::vector<RatPoly> cubics;
  for (const auto& m : all_monomials(3, 3)) cubics.push_back(RatPoly::term(3, m, 1));

  std::ostringstream out;
  auto run = [&](const char* name, const SiegelTau& tau, const std::vector<RatPoly>& basis, std::size_t expect) {
    const auto pts = points_of(sample_kummer(tau, 2 * basis.size() + 20, kSampleSeed));
    const RelationKernel k = relation_kernel(pts, basis);
    L.check(k.dim == expect && k.gap_ratio >= kMinGapRatio, std::string(name) + " dim " + std::to_string(k.dim));
    out << (out.tellp() > 0 ? ", " : "") << name << " dim " << k.dim << " gap " << sci(k.gap_ratio);
  };
  run("g2 quartics", tau2, quartics, 1);
  run("g3 cubics", tau3, cubics, 8);
  run("g3 K-cubics", tau3, k_invariant_cubics(3), 1);
  return out.str();
}

std::string crit9(Ledger& L) {
  const SiegelTau tau = random_tau(3, kTauSeedG3);
  std::vector<QuarticReconstruction> runs;
  double value = 0.0, gradient = 0.0, invariance = 0.0;
  for (auto seed : kCobleSeeds) {
    runs.push_back(coble_quartic(tau, seed));
    value = std::max(value, runs.back().value_residual);
    gradient = std::max(gradient, runs.back().gradient_residual);
    invariance = std::max(invariance, runs.back().invariance_residual);
  }
  double spread = 0.0;
  for (std::size_t i = 0; i < runs.size(); ++i)
    for (std::size_t j = i + 1; j < runs.size(); ++j)
      spread = std::max(spread, projective_distance(runs[i].coordinates, runs[j].coordinates));
  L.check(spread < 1e-6, "seed spread " + sci(spread));
  L.check(value < 1e-8, "value residual " + sci(value));
  L.check(gradient < 1e-8, "gradient residual " + sci(gradient));
  L.check(invariance < 1e-10, "invariance residual " + sci(invariance));
  return "seed spread " + sci(spread) + ", value " + sci(value) + ", gradient " + sci(gradient) + ", J[2] " +
         sci(invariance);
}

RatPoly random_poly(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 4), coeff(-5, 5), nterms(1, 6);
  std::uniform_int_distribution<std::uint32_t> var(0, (1u << g) - 1);
  RatPoly p(g);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Var> vs(static_cast<std::size_t>(deg(rng)));
    for (auto& v : vs) v = static_cast<Monomial::Var>(var(rng));
    p.add_term(Monomial(vs), coeff(rng));
  }
  return p;
}

std::string crit10(Ledger& L) {
  std::mt19937_64 rng(20240611);
  for (int g = 2; g <= 4; ++g) {
    std::uniform_int_distribution<std::uint32_t> vec(0, (1u << g) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const BitVec a(vec(rng), g), chi(vec(rng), g), b(vec(rng), g);
      const HeisElem x(1, a, chi);
      const RatPoly p = random_poly(g, rng);
      const RatPoly lhs = partial_derivative(heis_act_poly(x, p), b);
      const RatPoly rhs = heis_act_poly(x, partial_derivative(p, a + b)).scaled(char_eval(chi, b));
      L.check(lhs == rhs, "diffn g=" + std::to_string(g) + " trial " + std::to_string(trial));
    }
  }
  for (int g = 2; g <= 3; ++g) {
    const std::uint32_t n = 1u << g;
    for (std::uint32_t pa = 0; pa < n; ++pa)
      for (std::uint32_t pc = 0; pc < n; ++pc)
        for (std::uint32_t qa = 0; qa < n; ++qa)
          for (std::uint32_t qc = 0; qc < n; ++qc) {
            const TwoTorsionPoint p{BitVec(pa, g), BitVec(pc, g)};
            const TwoTorsionPoint q{BitVec(qa, g), BitVec(qc, g)};
            const HeisElem comm = heis_commutator(HeisElem::lift(p), HeisElem(-1, q.a, q.chi));
            L.check(comm == HeisElem(weil_pairing(p, q), BitVec::zero(g), BitVec::zero(g)),
                    "Weil pairing g=" + std::to_string(g));
          }
  }
  return "derivative covariance on 200 random (x,P) per g=2,3,4; Weil pairing = commutator on all pairs, g=2,3";
}

struct Entry {
  const char* title;
  double limit;
  std::function<std::string(Ledger&)> body;
};

const std::array<Entry, kNumCriteria>& entries() {
  static const std::array<Entry, kNumCriteria> table = {{
      {"Chern table", 1.0, crit1},
      {"Euler characteristics", 1.0, crit2},
      {"invariant dimensions", 0.0, crit3},
      {"d/dX_0 isomorphism", 0.0, crit4},
      {"restriction injectivity", 10.0, crit5},
      {"Verlinde and dimension counts", 0.0, crit6},
      {"self-intersection closed form", 0.0, crit7},
      {"numeric kernel dimensions", 60.0, crit8},
      {"Coble reconstruction", 0.0, crit9},
      {"structural identities", 0.0, crit10},
  }};
  return table;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kNumCriteria) throw std::invalid_argument("criterion id out of range");
  const Entry& entry = entries()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = entry.title;
  r.limit_seconds = entry.limit;
  Ledger ledger;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string summary = entry.body(ledger);
    r.passed = ledger.ok();
    r.detail = ledger.summary(summary);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.passed = false;
    r.detail += "; runtime limit " + str(r.limit_seconds) + " s exceeded";
  }
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << std::fixed << std::setprecision(3)
     << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace thetawb::acceptance
