#include "thetawb/heisenberg.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace thetawb {

BitVec::BitVec(std::uint32_t bits, int g) : bits_(bits), g_(g) {
  if (g < 1 || g > kMaxGenus) {
    throw std::invalid_argument("genus out of range [1,16]: " + std::to_string(g));
  }
  if (g < 32 && (bits >> g) != 0) {
    throw std::invalid_argument("bit vector " + std::to_string(bits) + " does not fit in genus " +
                                std::to_string(g));
  }
}

BitVec BitVec::unit(int i, int g) {
  if (i < 0 || i >= g) throw std::invalid_argument("unit vector index out of range");
  return BitVec(1u << i, g);
}

int BitVec::weight() const { return std::popcount(bits_); }

BitVec BitVec::operator+(BitVec other) const {
  require_same_genus(g_, other.g_);
  return BitVec(bits_ ^ other.bits_, g_);
}

void require_same_genus(int g1, int g2) {
  if (g1 != g2) {
    throw std::invalid_argument("genus mismatch: " + std::to_string(g1) + " vs " + std::to_string(g2));
  }
}

int dot(BitVec c, BitVec a) {
  require_same_genus(c.genus(), a.genus());
  return std::popcount(c.bits() & a.bits()) & 1;
}

int char_eval(BitVec chi, BitVec a) { return dot(chi, a) ? -1 : 1; }

HeisElem::HeisElem(mpq_class scalar, BitVec a, BitVec chi)
    : scalar_(std::move(scalar)), a_(a), chi_(chi) {
  require_same_genus(a.genus(), chi.genus());
  if (scalar_ == 0) throw std::invalid_argument("Heisenberg scalar must be nonzero");
  scalar_.canonicalize();
}

HeisElem heis_mul(const HeisElem& x, const HeisElem& y) {
  require_same_genus(x.genus(), y.genus());
  mpq_class s = x.scalar() * y.scalar();
  if (char_eval(y.chi(), x.a()) < 0) s = -s;
  return HeisElem(s, x.a() + y.a(), x.chi() + y.chi());
}

HeisElem heis_inverse(const HeisElem& x) {
  mpq_class s = 1 / x.scalar();
  if (char_eval(x.chi(), x.a()) < 0) s = -s;
  return HeisElem(s, x.a(), x.chi());
}

HeisElem heis_commutator(const HeisElem& x, const HeisElem& y) {
  return heis_mul(heis_mul(x, y), heis_mul(heis_inverse(x), heis_inverse(y)));
}

BasisImage heis_act_basis(const HeisElem& x, BitVec b) {
  require_same_genus(x.genus(), b.genus());
  BitVec target = x.a() + b;
  mpq_class s = x.scalar();
  if (char_eval(x.chi(), target) < 0) s = -s;
  return {s, target};
}

int weil_pairing(const TwoTorsionPoint& p, const TwoTorsionPoint& q) {
  require_same_genus(p.genus(), q.genus());
  return char_eval(p.chi, q.a) * char_eval(q.chi, p.a);
}

std::vector<HeisElem> k_generators(int g) {
  std::vector<HeisElem> out;
  for (int i = 0; i < g; ++i) out.emplace_back(1, BitVec::zero(g), BitVec::unit(i, g));
  return out;
}

std::vector<HeisElem> khat_generators(int g) {
  std::vector<HeisElem> out;
  for (int i = 0; i < g; ++i) out.emplace_back(1, BitVec::unit(i, g), BitVec::zero(g));
  return out;
}

std::vector<HeisElem> j2_generators(int g) {
  auto out = khat_generators(g);
  auto k = k_generators(g);
  out.insert(out.end(), k.begin(), k.end());
  return out;
}

}  // namespace thetawb
