#ifndef TORSOR_ABSTRACT_GROUP_HPP
#define TORSOR_ABSTRACT_GROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsor/automorphism.hpp"
#include "torsor/finite_group.hpp"

namespace torsor {

/// A group given purely by its multiplication table (identity at index 0).
/// Used for computed quotients such as Out(H) and its subquotients.
class AbstractGroup {
 public:
  AbstractGroup(int order, std::vector<int> mul_table);  // validates Latin square + identity

  int order() const { return order_; }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& mul_table() const { return mul_; }

  bool abelian() const;
  int element_order(int a) const;
  /// order -> count of elements of that order.
  std::map<int, int> order_histogram() const;

  /// Name from the small named catalog (cyclic, symmetric <= S5, dihedral),
  /// e.g. "C3", "S4", "D7"; falls back to "G<order>".
  std::string identify() const;

  static AbstractGroup trivial();
  static AbstractGroup cyclic(int n);
  static AbstractGroup from_finite_group(const FiniteGroup& G);

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

/// A subgroup of an AbstractGroup: its own table plus the embedding that
/// sends subgroup index i to parent element embedding[i] (ascending).
struct Subgroup {
  AbstractGroup group;
  std::vector<int> embedding;
};

/// {c : ca = ac} as a subgroup.
Subgroup out_centralizer(const AbstractGroup& G, int a);

/// The cyclic subgroup generated by a.
Subgroup cyclic_closure(const AbstractGroup& G, int a);

struct QuotientResult {
  AbstractGroup group;
  std::vector<int> coset_of;  // parent element -> quotient index
};

/// C / N for N a central subgroup, given as the sorted element set of N.
/// Cosets are labeled by their least member, in ascending order, so the
/// result is deterministic. Throws ParseError if N is not a central subgroup.
QuotientResult quotient(const AbstractGroup& C, const std::vector<int>& normal_elements);

/// Witness isomorphism table (A index -> B index) or absent. Prunes by
/// order, abelian flag and order histogram before backtracking over
/// generator images. When A == B structurally, the identity map is found
/// first, so the witness is deterministic.
std::optional<std::vector<int>> iso_test(const AbstractGroup& A, const AbstractGroup& B);

/// Some c with c^-1 a c = b, or absent.
std::optional<int> out_conjugacy_test(const AbstractGroup& G, int a, int b);

/// Out(H) together with the data needed to map automorphisms to classes.
///
/// Canonical class representative: the lexicographically least image table
/// in the inner coset. Classes are sorted by representative table, so the
/// identity class has index 0 and the layout is deterministic.
class OuterQuotient {
 public:
  OuterQuotient(GroupPtr group, const std::vector<Automorphism>& auts);

  const AbstractGroup& group() const { return group_; }
  const std::vector<Automorphism>& reps() const { return reps_; }
  /// Index of the class of a (by canonicalizing its coset).
  int class_of(const Automorphism& a) const;
  /// Lex-least table in the inner coset of a.
  Automorphism canonical_rep(const Automorphism& a) const;
  int inn_order() const { return inn_order_; }

 private:
  GroupPtr base_;
  std::vector<Automorphism> reps_;
  std::map<std::vector<ElementId>, int> index_;
  int inn_order_;
  AbstractGroup group_;
};

/// project_out: the outer automorphism group of H given auts = compute_aut(H).
OuterQuotient project_out(const GroupPtr& group, const std::vector<Automorphism>& auts);

}  // namespace torsor

#endif  // TORSOR_ABSTRACT_GROUP_HPP
