#include "torsor/automorphism.hpp"

#include <algorithm>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

namespace {

void require_valid_table(const FiniteGroup& G, const std::vector<ElementId>& table) {
  const int n = G.order();
  if (static_cast<int>(table.size()) != n)
    throw ParseError("automorphism table size does not match group order");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (ElementId img : table) {
    if (img < 0 || img >= n || seen[static_cast<std::size_t>(img)])
      throw ParseError("automorphism table is not a bijection");
    seen[static_cast<std::size_t>(img)] = true;
  }
  if (table[0] != 0) throw ParseError("automorphism must fix the identity");
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (table[static_cast<std::size_t>(G.mul(a, b))] !=
          G.mul(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]))
        throw ParseError("table does not satisfy the homomorphism law");
}

}  // namespace

Automorphism::Automorphism(GroupPtr group, std::vector<ElementId> table)
    : group_(std::move(group)), table_(std::move(table)) {
  require_valid_table(*group_, table_);
}

Automorphism Automorphism::identity(GroupPtr group) {
  std::vector<ElementId> table(static_cast<std::size_t>(group->order()));
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<ElementId>(i);
  return Automorphism(std::move(group), std::move(table));
}

Automorphism Automorphism::then(const Automorphism& next) const {
  std::vector<ElementId> out(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    out[i] = next.table_[static_cast<std::size_t>(table_[i])];
  Automorphism a = *this;
  a.table_ = std::move(out);
  return a;
}

Automorphism Automorphism::inverse() const {
  std::vector<ElementId> out(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    out[static_cast<std::size_t>(table_[i])] = static_cast<ElementId>(i);
  Automorphism a = *this;
  a.table_ = std::move(out);
  return a;
}

int Automorphism::order() const {
  Automorphism x = *this;
  int ord = 1;
  while (!x.is_identity()) {
    x = x.then(*this);
    ++ord;
  }
  return ord;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != static_cast<ElementId>(i)) return false;
  return true;
}

bool is_automorphism_table(const FiniteGroup& G, const std::vector<ElementId>& table) {
  try {
    require_valid_table(G, table);
  } catch (const ParseError&) {
    return false;
  }
  return true;
}

Automorphism inner(const GroupPtr& group, ElementId g) {
  const FiniteGroup& G = *group;
  std::vector<ElementId> table(static_cast<std::size_t>(G.order()));
  for (ElementId h = 0; h < G.order(); ++h)
    table[static_cast<std::size_t>(h)] = G.conjugate(h, g);
  return Automorphism(group, std::move(table));
}

namespace {

// Fill the full image table determined by generator images, walking the BFS
// spanning tree. Returns false on any bijectivity conflict along the way.
bool extend_by_generators(const FiniteGroup& G, const std::vector<ElementId>& gen_images,
                          std::vector<ElementId>& table) {
  const int n = G.order();
  table.assign(static_cast<std::size_t>(n), -1);
  table[0] = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;
  for (ElementId a = 1; a < n; ++a) {
    auto [parent, gen] = G.tree_edge(a);  // parent < a, so already filled
    ElementId img = G.mul(table[static_cast<std::size_t>(parent)],
                          gen_images[static_cast<std::size_t>(gen)]);
    table[static_cast<std::size_t>(a)] = img;
    if (used[static_cast<std::size_t>(img)]) return false;
    used[static_cast<std::size_t>(img)] = true;
  }
  return true;
}

bool satisfies_hom_law(const FiniteGroup& G, const std::vector<ElementId>& table) {
  const int n = G.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (table[static_cast<std::size_t>(G.mul(a, b))] !=
          G.mul(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

}  // namespace

std::vector<Automorphism> compute_aut(const GroupPtr& group, int element_cap) {
  const FiniteGroup& G = *group;
  if (G.order() > element_cap)
    throw CapExceeded("automorphism search: group order exceeds cap");

  const std::vector<ElementId>& gens = G.generator_ids();
  // Candidate images of each generator share its order and conjugacy-class size.
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = G.element_order(gens[i]);
    int cls = G.class_size(gens[i]);
    for (ElementId x = 0; x < G.order(); ++x)
      if (G.element_order(x) == ord && G.class_size(x) == cls) candidates[i].push_back(x);
  }

  std::vector<std::vector<ElementId>> found;
  std::vector<ElementId> choice(gens.size());
  std::vector<ElementId> table;
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (extend_by_generators(G, choice, table) && satisfies_hom_law(G, table))
        found.push_back(table);
      return;
    }
    for (ElementId c : candidates[depth]) {
      choice[depth] = c;
      self(self, depth + 1);
    }
  };
  search(search, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<Automorphism> out;
  out.reserve(found.size());
  for (std::vector<ElementId>& t : found) out.emplace_back(group, std::move(t));
  return out;
}

}  // namespace torsor
