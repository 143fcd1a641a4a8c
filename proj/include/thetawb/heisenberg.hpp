// Level-2 finite Heisenberg group and its action on the canonical basis {X_sigma}.
//
// Vectors of F_2^g are bitmasks. A character of F_2^g is coded by a vector c
// through chi_c(a) = (-1)^{c.a}; all level-2 characters take values +-1, so
// this identification is exact.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace thetawb {

inline constexpr int kMaxGenus = 16;

/// An element of F_2^g. Addition is XOR.
class BitVec {
 public:
  BitVec() = default;
  BitVec(std::uint32_t bits, int g);

  static BitVec zero(int g) { return BitVec(0, g); }
  static BitVec unit(int i, int g);

  std::uint32_t bits() const { return bits_; }
  int genus() const { return g_; }
  bool is_zero() const { return bits_ == 0; }
  bool test(int i) const { return (bits_ >> i) & 1u; }
  int weight() const;

  BitVec operator+(BitVec other) const;
  BitVec& operator+=(BitVec other) { return *this = *this + other; }

  friend bool operator==(BitVec, BitVec) = default;
  friend auto operator<=>(BitVec, BitVec) = default;

 private:
  std::uint32_t bits_ = 0;
  int g_ = 0;
};

/// Throws std::invalid_argument when two genera differ.
void require_same_genus(int g1, int g2);

/// Parity of the dot product c.a over F_2.
int dot(BitVec c, BitVec a);

/// chi_c(a) as +1 / -1.
int char_eval(BitVec chi, BitVec a);

/// A point of J[2] = F_2^g x Hom(F_2^g, C*).
struct TwoTorsionPoint {
  BitVec a;
  BitVec chi;

  int genus() const { return a.genus(); }
  TwoTorsionPoint operator+(const TwoTorsionPoint& o) const { return {a + o.a, chi + o.chi}; }
  friend bool operator==(const TwoTorsionPoint&, const TwoTorsionPoint&) = default;
};

/// (s, a, chi) with s a nonzero rational.
class HeisElem {
 public:
  HeisElem(mpq_class scalar, BitVec a, BitVec chi);

  static HeisElem identity(int g) { return HeisElem(1, BitVec::zero(g), BitVec::zero(g)); }
  /// The lift (1, a, chi) of a two-torsion point.
  static HeisElem lift(const TwoTorsionPoint& p) { return HeisElem(1, p.a, p.chi); }

  const mpq_class& scalar() const { return scalar_; }
  BitVec a() const { return a_; }
  BitVec chi() const { return chi_; }
  int genus() const { return a_.genus(); }

  friend bool operator==(const HeisElem&, const HeisElem&) = default;

 private:
  mpq_class scalar_;
  BitVec a_;
  BitVec chi_;
};

/// (s,a,chi)(t,b,gamma) = (s t gamma(a), a+b, chi gamma).
HeisElem heis_mul(const HeisElem& x, const HeisElem& y);

/// (s,a,chi)^{-1} = (s^{-1} chi(a), a, chi).
HeisElem heis_inverse(const HeisElem& x);

/// x y x^{-1} y^{-1}.
HeisElem heis_commutator(const HeisElem& x, const HeisElem& y);

struct BasisImage {
  mpq_class scalar;
  BitVec index;
};

/// Image of X_b under x = (s,a,chi): s chi(a+b) X_{a+b}.
BasisImage heis_act_basis(const HeisElem& x, BitVec b);

/// e(p,q) = chi_p(a_q) chi_q(a_p), the commutator pairing on J[2].
int weil_pairing(const TwoTorsionPoint& p, const TwoTorsionPoint& q);

/// Lifts (1,e_i,0) and (1,0,e_i) for i < g; they generate a lift of J[2].
std::vector<HeisElem> j2_generators(int g);
/// (1,0,e_i): generators of the level subgroup K.
std::vector<HeisElem> k_generators(int g);
/// (1,e_i,0): generators of the level subgroup K-hat.
std::vector<HeisElem> khat_generators(int g);

}  // namespace thetawb
