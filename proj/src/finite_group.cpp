#include "torsor/finite_group.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

FiniteGroup FiniteGroup::close(std::string name, int degree,
                               std::vector<Permutation> generators, int element_cap) {
  if (degree <= 0) throw ParseError("group degree must be positive");
  if (generators.empty()) throw ParseError("group needs at least one generator");
  if (element_cap <= 0) throw ParseError("element cap must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw ParseError("generator degree does not match group degree");

  FiniteGroup G;
  G.name_ = std::move(name);
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  std::map<Permutation, ElementId> index;
  G.elements_.emplace_back(degree);
  index.emplace(G.elements_[0], 0);
  G.parent_.push_back(-1);
  G.gen_in_.push_back(-1);

  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (std::size_t gi = 0; gi < G.generators_.size(); ++gi) {
      Permutation next = G.elements_[head].then(G.generators_[gi]);
      if (index.contains(next)) continue;
      if (static_cast<int>(G.elements_.size()) >= element_cap)
        throw CapExceeded("group closure exceeds element cap " + std::to_string(element_cap));
      index.emplace(next, static_cast<ElementId>(G.elements_.size()));
      G.elements_.push_back(std::move(next));
      G.parent_.push_back(static_cast<ElementId>(head));
      G.gen_in_.push_back(static_cast<int>(gi));
    }
  }

  const std::size_t n = G.elements_.size();
  G.mul_.resize(n * n);
  G.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Permutation p = G.elements_[a].then(G.elements_[b]);
      G.mul_[a * n + b] = index.at(p);
    }
    G.inv_[a] = index.at(G.elements_[a].inverse());
  }

  G.generator_ids_.reserve(G.generators_.size());
  for (const Permutation& g : G.generators_) G.generator_ids_.push_back(index.at(g));
  return G;
}

const Permutation& FiniteGroup::element(ElementId a) const {
  if (a < 0 || a >= order()) throw ParseError("element id out of range");
  return elements_[static_cast<std::size_t>(a)];
}

ElementId FiniteGroup::id_of(const Permutation& p) const {
  auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) throw ParseError("permutation is not an element of the group");
  return static_cast<ElementId>(it - elements_.begin());
}

ElementId FiniteGroup::commutator(ElementId h, ElementId k) const {
  return mul(mul(mul(inv(h), inv(k)), h), k);
}

ElementId FiniteGroup::conjugate(ElementId h, ElementId g) const {
  return mul(mul(inv(g), h), g);
}

int FiniteGroup::element_order(ElementId a) const {
  int ord = 1;
  ElementId x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<ElementId> FiniteGroup::center() const {
  std::vector<ElementId> out;
  for (ElementId z = 0; z < order(); ++z) {
    bool central = true;
    for (ElementId x = 0; x < order() && central; ++x)
      central = mul(z, x) == mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<ElementId> FiniteGroup::centralizer(ElementId x) const {
  std::vector<ElementId> out;
  for (ElementId c = 0; c < order(); ++c)
    if (mul(c, x) == mul(x, c)) out.push_back(c);
  return out;
}

std::optional<ElementId> FiniteGroup::conjugacy_test(ElementId x, ElementId y) const {
  for (ElementId c = 0; c < order(); ++c)
    if (conjugate(x, c) == y) return c;
  return std::nullopt;
}

int FiniteGroup::class_size(ElementId a) const {
  std::vector<bool> seen(static_cast<std::size_t>(order()), false);
  int count = 0;
  for (ElementId c = 0; c < order(); ++c) {
    ElementId img = conjugate(a, c);
    if (!seen[static_cast<std::size_t>(img)]) {
      seen[static_cast<std::size_t>(img)] = true;
      ++count;
    }
  }
  return count;
}

std::pair<ElementId, int> FiniteGroup::tree_edge(ElementId a) const {
  if (a <= 0 || a >= order()) throw ParseError("element id out of range");
  return {parent_[static_cast<std::size_t>(a)], gen_in_[static_cast<std::size_t>(a)]};
}

std::vector<int> FiniteGroup::word_for(ElementId a) const {
  if (a < 0 || a >= order()) throw ParseError("element id out of range");
  std::vector<int> word;
  while (a != 0) {
    word.push_back(gen_in_[static_cast<std::size_t>(a)] + 1);
    a = parent_[static_cast<std::size_t>(a)];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

ElementId FiniteGroup::eval_word(const std::vector<int>& word) const {
  ElementId x = 0;
  for (int letter : word) {
    if (letter == 0) throw ParseError("word letter must be nonzero");
    int gi = std::abs(letter) - 1;
    if (gi >= static_cast<int>(generator_ids_.size()))
      throw ParseError("word letter exceeds generator count");
    ElementId g = generator_ids_[static_cast<std::size_t>(gi)];
    x = mul(x, letter > 0 ? g : inv(g));
  }
  return x;
}

GroupPtr make_group(std::string name, int degree, std::vector<Permutation> generators,
                    int element_cap) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::close(std::move(name), degree, std::move(generators), element_cap));
}

}  // namespace torsor
