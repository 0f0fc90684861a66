#ifndef TORSOR_MAPPING_TORUS_HPP
#define TORSOR_MAPPING_TORUS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "torsor/abstract_group.hpp"
#include "torsor/automorphism.hpp"
#include "torsor/finite_group.hpp"

namespace torsor {

using BigInt = boost::multiprecision::cpp_int;

/// An element of the mapping torus in normal form h * t^k. Equality is
/// componentwise; t-exponents are exact arbitrary-precision integers.
struct TorusElement {
  ElementId h = 0;
  BigInt k = 0;
  bool operator==(const TorusElement&) const = default;
};

/// The mapping torus of a finite group: the extension of the base by an
/// infinite cyclic group whose generator t acts by the twisting
/// automorphism phi, i.e. t h t^-1 = phi(h).
class MappingTorus {
 public:
  MappingTorus(GroupPtr base, Automorphism phi);

  const GroupPtr& base_ptr() const { return base_; }
  const FiniteGroup& base() const { return *base_; }
  const Automorphism& phi() const { return phi_; }
  int phi_order() const { return static_cast<int>(phi_powers_.size()); }
  /// phi^k(h); k may be any integer, reduced modulo the order of phi.
  ElementId phi_pow(const BigInt& k, ElementId h) const;
  const Automorphism& phi_power(int k) const;  // 0 <= k < phi_order

  /// (h1, k1) (h2, k2) = (h1 * phi^k1(h2), k1 + k2).
  TorusElement mul(const TorusElement& x, const TorusElement& y) const;
  TorusElement inv(const TorusElement& x) const;
  /// True iff the element has finite order; for a finite base that is
  /// exactly the elements with t-exponent 0.
  bool torsion(const TorusElement& x) const { return x.k == 0; }

 private:
  GroupPtr base_;
  Automorphism phi_;
  std::vector<Automorphism> phi_powers_;  // phi^0 .. phi^(m-1)
};

/// An automorphism of the mapping torus in parametrized form:
/// h -> base_aut(h) for h in the base, t -> twist * t^eps.
///
/// Construction verifies that the map preserves the defining relation on
/// every base element, which for eps = +-1 and bijective base_aut makes the
/// induced map on normal forms an automorphism.
class TorusAut {
 public:
  TorusAut(const MappingTorus& M, Automorphism base_aut, ElementId twist, int eps);

  const Automorphism& base_aut() const { return base_aut_; }
  ElementId twist() const { return twist_; }
  int eps() const { return eps_; }

  bool operator==(const TorusAut& o) const {
    return eps_ == o.eps_ && twist_ == o.twist_ && base_aut_ == o.base_aut_;
  }

 private:
  Automorphism base_aut_;
  ElementId twist_;
  int eps_;
};

/// True iff (base_aut, twist, eps) satisfies the relation check without
/// constructing: base_aut(phi(h)) == twist * phi^eps(base_aut(h)) * twist^-1.
bool preserves_relation(const MappingTorus& M, const Automorphism& base_aut, ElementId twist,
                        int eps);

/// The twist element g making (delta, g, +1) an automorphism, i.e. the
/// solution of delta(phi(h)) = g phi(delta(h)) g^-1 for all h. Exists iff
/// the class of delta centralizes the class of phi in Out(H); unique when
/// the base has trivial center (least id otherwise). Found by scanning.
std::optional<ElementId> alpha_twist(const MappingTorus& M, const Automorphism& delta);

/// The orientation-preserving automorphism for delta; throws NotCentralizing
/// when no twist exists.
TorusAut build_alpha(const MappingTorus& M, const Automorphism& delta);

/// The element g solving delta(phi(h)) = g^-1 phi^-1(delta(h)) g for all h.
/// Exists iff the class of delta conjugates the class of phi to its inverse.
std::optional<ElementId> zeta_twist(const MappingTorus& M, const Automorphism& delta);

/// The orientation-reversing automorphism for delta: t -> g^-1 t^-1 with g
/// from zeta_twist (the stored twist is g^-1). Throws NotReversing.
TorusAut build_zeta(const MappingTorus& M, const Automorphism& delta);

/// Image of x under a, in normal form.
TorusElement apply(const MappingTorus& M, const TorusAut& a, const TorusElement& x);

/// Left-to-right composite (apply a, then b) and inverse, in parametrized form.
TorusAut compose(const MappingTorus& M, const TorusAut& a, const TorusAut& b);
TorusAut invert(const MappingTorus& M, const TorusAut& a);

/// Conjugation x -> (k t^i) x (k t^i)^-1 in parametrized form. Conjugation
/// by t^m is trivial when phi^m is the identity, so i is reduced modulo the
/// order of phi; the full set of inner automorphisms of the torus is
/// { torus_inner(k, i) : k in H, 0 <= i < phi_order }.
TorusAut torus_inner(const MappingTorus& M, ElementId k, const BigInt& i);

/// True iff a and b differ by an inner automorphism of the torus
/// (exhaustive search over torus_inner(k, i)).
bool inner_equivalent(const MappingTorus& M, const TorusAut& a, const TorusAut& b);

enum class AutKind { Alpha, Zeta };

struct ClassifiedAut {
  AutKind kind;
  Automorphism base_aut;
};

/// Tag by orientation: eps = +1 is the alpha form, eps = -1 the zeta form.
ClassifiedAut classify(const TorusAut& a);

/// Sort key for inner-equivalence classes: orientation, base table, twist.
using TorusClassKey = std::tuple<int, std::vector<ElementId>, ElementId>;

/// Out(H_phi) computed by direct enumeration: every (delta, g, eps) triple is
/// relation-checked (independently of the twist solvers), the verified maps
/// are partitioned by inner equivalence, and class multiplication is read
/// off from canonical representatives. The identity class has index 0 and
/// the remaining classes are sorted canonically.
class DirectOut {
 public:
  DirectOut(const MappingTorus& M, long long enumeration_cap);

  const AbstractGroup& out() const { return out_; }
  const AbstractGroup& out0() const { return out0_; }
  int index() const { return index_; }
  const std::vector<TorusAut>& reps() const { return reps_; }
  /// Out indices of the orientation-preserving classes, ascending.
  const std::vector<int>& out0_ids() const { return out0_ids_; }
  /// Index of the inner-equivalence class of a.
  int class_of(const MappingTorus& M, const TorusAut& a) const;

 private:
  std::vector<TorusAut> reps_;
  std::vector<TorusAut> inners_;
  std::map<TorusClassKey, int> class_index_;
  std::vector<int> out0_ids_;
  int index_;
  AbstractGroup out_;
  AbstractGroup out0_;
};

DirectOut enumerate_out_direct(const MappingTorus& M, long long enumeration_cap);

}  // namespace torsor

#endif  // TORSOR_MAPPING_TORUS_HPP
