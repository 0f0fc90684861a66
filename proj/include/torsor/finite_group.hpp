#ifndef TORSOR_FINITE_GROUP_HPP
#define TORSOR_FINITE_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsor/permutation.hpp"

namespace torsor {

/// Index into FiniteGroup::element; id 0 is always the identity.
using ElementId = int;

inline constexpr int kDefaultElementCap = 10000;

/// A finite group given by permutation generators, fully enumerated.
///
/// Elements are ordered by breadth-first closure from the identity,
/// right-multiplying by the generators in file order. The ordering is
/// deterministic, so element ids are stable across runs and machines.
///
/// Multiplication is left-to-right: mul(a, b) applies a first, then b.
/// All state is immutable after construction.
class FiniteGroup {
 public:
  static FiniteGroup close(std::string name, int degree,
                           std::vector<Permutation> generators,
                           int element_cap = kDefaultElementCap);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }

  const Permutation& element(ElementId a) const;
  ElementId id_of(const Permutation& p) const;  // throws ParseError if absent
  /// Ids of the generators, in file order.
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }

  ElementId identity() const { return 0; }
  ElementId mul(ElementId a, ElementId b) const {
    return mul_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  }
  ElementId inv(ElementId a) const { return inv_[static_cast<std::size_t>(a)]; }

  /// h^-1 k^-1 h k, exactly in that order.
  ElementId commutator(ElementId h, ElementId k) const;
  /// g^-1 h g.
  ElementId conjugate(ElementId h, ElementId g) const;

  int element_order(ElementId a) const;
  std::vector<ElementId> center() const;
  std::vector<ElementId> centralizer(ElementId x) const;
  /// Some c with c^-1 x c = y, least id first, or absent.
  std::optional<ElementId> conjugacy_test(ElementId x, ElementId y) const;
  /// Size of the conjugacy class of a.
  int class_size(ElementId a) const;

  /// BFS spanning-tree edge for a > 0: a == mul(first, generators()[second]),
  /// and first < a.
  std::pair<ElementId, int> tree_edge(ElementId a) const;

  /// Expression of an element as a word over the generators
  /// (+j = generator j-1), read left to right as a product.
  /// Follows the BFS spanning tree, so words are deterministic.
  std::vector<int> word_for(ElementId a) const;
  /// Evaluate such a word back to an element. Letters must be nonzero and
  /// |letter| <= number of generators.
  ElementId eval_word(const std::vector<int>& word) const;

 private:
  FiniteGroup() = default;

  std::string name_;
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::vector<ElementId> mul_;  // flat order x order table
  std::vector<ElementId> inv_;
  // BFS spanning tree: element a>0 was first seen as parent_[a] * generator gen_in_[a].
  std::vector<ElementId> parent_;
  std::vector<int> gen_in_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::string name, int degree, std::vector<Permutation> generators,
                    int element_cap = kDefaultElementCap);

}  // namespace torsor

#endif  // TORSOR_FINITE_GROUP_HPP
