#ifndef TORSOR_AUTOMORPHISM_HPP
#define TORSOR_AUTOMORPHISM_HPP

#include <compare>
#include <vector>

#include "torsor/finite_group.hpp"

namespace torsor {

/// An automorphism of a finite group, stored as a full element-image table.
///
/// The constructor verifies the table: it must be a bijection fixing the
/// identity and satisfying table[ab] = table[a] table[b] on all pairs.
/// Composition is left-to-right like everywhere else: a.then(b) maps
/// h to b(a(h)).
class Automorphism {
 public:
  Automorphism(GroupPtr group, std::vector<ElementId> table);
  static Automorphism identity(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  ElementId operator()(ElementId h) const { return table_[static_cast<std::size_t>(h)]; }
  const std::vector<ElementId>& table() const { return table_; }

  Automorphism then(const Automorphism& next) const;
  Automorphism inverse() const;
  int order() const;
  bool is_identity() const;

  bool operator==(const Automorphism& o) const { return table_ == o.table_; }
  auto operator<=>(const Automorphism& o) const { return table_ <=> o.table_; }

 private:
  GroupPtr group_;
  std::vector<ElementId> table_;
};

/// True iff table describes an automorphism (bijection + homomorphism law).
bool is_automorphism_table(const FiniteGroup& G, const std::vector<ElementId>& table);

/// Conjugation h -> g^-1 h g.
Automorphism inner(const GroupPtr& group, ElementId g);

/// The complete automorphism group, by backtracking over generator images
/// (candidates pruned by element order and conjugacy-class size), each
/// candidate validated by a full-table homomorphism check.
/// Output is sorted by image table, so the order is deterministic.
std::vector<Automorphism> compute_aut(const GroupPtr& group,
                                      int element_cap = kDefaultElementCap);

}  // namespace torsor

#endif  // TORSOR_AUTOMORPHISM_HPP
