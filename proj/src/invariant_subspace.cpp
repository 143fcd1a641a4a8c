#include "thetawb/invariant_subspace.hpp"

#include <deque>
#include <optional>

namespace thetawb {

namespace {

struct Image {
  std::size_t index;
  mpq_class factor;
};

Image act_on_monomial(const HeisElem& x, const Monomial& m, int g,
                      const std::map<Monomial, std::size_t>& index_of) {
  mpq_class factor = 1;
  std::vector<Monomial::Var> image;
  image.reserve(m.vars().size());
  for (auto v : m.vars()) {
    auto img = heis_act_basis(x, BitVec(v, g));
    factor *= img.scalar;
    image.push_back(static_cast<Monomial::Var>(img.index.bits()));
  }
  return {index_of.at(Monomial(std::move(image))), factor};
}

}  // namespace

std::vector<RatPoly> invariant_subspace(const std::vector<HeisElem>& generators, int n, int g) {
  for (const auto& x : generators) require_same_genus(x.genus(), g);
  const auto monomials = all_monomials(g, n);
  std::map<Monomial, std::size_t> index_of;
  for (std::size_t i = 0; i < monomials.size(); ++i) index_of.emplace(monomials[i], i);

  // Fixed vectors satisfy v[image(m)] = factor(m) * v[m] along every edge.
  std::vector<std::optional<mpq_class>> weight(monomials.size());
  std::vector<RatPoly> basis;
  for (std::size_t root = 0; root < monomials.size(); ++root) {
    if (weight[root]) continue;
    weight[root] = mpq_class(1);
    std::vector<std::size_t> orbit{root};
    std::deque<std::size_t> queue{root};
    bool consistent = true;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& x : generators) {
        auto img = act_on_monomial(x, monomials[cur], g, index_of);
        mpq_class w = img.factor * *weight[cur];
        auto& slot = weight[img.index];
        if (!slot) {
          slot = w;
          orbit.push_back(img.index);
          queue.push_back(img.index);
        } else if (*slot != w) {
          consistent = false;
        }
      }
    }
    if (!consistent) continue;
    RatPoly p(g);
    for (auto i : orbit) p.add_term(monomials[i], *weight[i]);
    basis.push_back(std::move(p));
  }
  return basis;
}

bool is_invariant(const RatPoly& p, const std::vector<HeisElem>& generators) {
  for (const auto& x : generators)
    if (!(heis_act_poly(x, p) == p)) return false;
  return true;
}

}  // namespace thetawb
