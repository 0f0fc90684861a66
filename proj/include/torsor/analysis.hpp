#ifndef TORSOR_ANALYSIS_HPP
#define TORSOR_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsor/abstract_group.hpp"
#include "torsor/automorphism.hpp"
#include "torsor/finite_group.hpp"
#include "torsor/mapping_torus.hpp"

namespace torsor {

/// Preconditions for the centralizer-quotient description of the outer
/// automorphism group of the torus.
struct HypothesisReport {
  bool trivial_center = false;
  /// Always true for a finite base group; the justification is recorded so
  /// reports state explicitly that this was discharged, not computed.
  bool no_epi_onto_z = true;
  std::string no_epi_justification;
  bool phi_valid = false;
  bool ok() const { return trivial_center && no_epi_onto_z && phi_valid; }
};

HypothesisReport check_hypotheses(const GroupPtr& H, const std::vector<ElementId>& phi_table);

/// Elementwise checks that sending a centralizer class to the class of its
/// orientation-preserving torus automorphism is a well-defined surjective
/// homomorphism onto the enumerated classes, with kernel the powers of the
/// twisting class.
struct AlphaMapChecks {
  bool well_defined = false;
  bool homomorphism = false;
  bool surjective = false;
  bool kernel_is_phi_closure = false;
  std::string counterexample;  // first failure; empty when all pass
  bool all() const { return well_defined && homomorphism && surjective && kernel_is_phi_closure; }
};

struct GroupSummary {
  int order = 1;
  bool abelian = true;
  std::map<int, int> order_histogram;
  std::string catalog;
  static GroupSummary of(const AbstractGroup& g);
};

struct AnalysisCaps {
  int element_cap = kDefaultElementCap;
  long long enum_cap = 1000000;
};

struct AnalysisReport {
  HypothesisReport hypotheses;
  std::string group_name;
  int group_order = 0;
  int group_degree = 0;
  int aut_order = 0;
  int inn_order = 0;
  int out_order = 0;
  std::string out_catalog;
  int phi_aut_order = 0;    // order of phi in Aut(H)
  int phi_class_order = 0;  // order of its class in Out(H)
  // Formula side.
  int centralizer_order = 0;
  int cyclic_phi_order = 0;
  GroupSummary formula_out0;
  int index = 0;  // 1 or 2, from the conjugacy dichotomy
  bool phi_conjugate_to_inverse = false;
  int predicted_out_order = 0;  // index * |formula out0|
  // Oracle side, present only when cross-validating.
  std::optional<GroupSummary> direct_out0;
  std::optional<GroupSummary> direct_out;
  std::optional<int> direct_index;
  std::optional<bool> zeta_exists;
  std::optional<AlphaMapChecks> alpha_map;
  std::optional<std::vector<int>> iso_witness;  // formula out0 -> direct out0
};

/// The full pipeline around a single torus. Hypotheses are checked up
/// front; every other accessor refuses to run unless they hold.
class TorusAnalysis {
 public:
  TorusAnalysis(GroupPtr H, const std::vector<ElementId>& phi_table,
                AnalysisCaps caps = AnalysisCaps{});

  const HypothesisReport& hypotheses() const { return hypotheses_; }

  const MappingTorus& torus() const;
  const OuterQuotient& out_h() const;
  int phi_class() const;

  /// The centralizer of the twisting class modulo its cyclic closure.
  const AbstractGroup& out0_formula() const;
  const Subgroup& centralizer() const;
  const Subgroup& phi_closure() const;  // inside Out(H)

  /// 2 iff the twisting class is conjugate to its inverse in Out(H), else 1.
  int out0_index() const;
  bool phi_conjugate_to_inverse() const;

  /// Exhaustive scan for an orientation-reversing automorphism.
  bool zeta_exists() const;

  /// Enumeration oracle (computed on first use).
  const DirectOut& direct() const;

  /// Elementwise verification of the centralizer-to-classes map.
  AlphaMapChecks alpha_map_checks() const;

  /// Assemble the report. With cross_validate, runs the enumeration oracle,
  /// the map checks and the witness isomorphism, and throws
  /// CrossValidationError on any mismatch (an internal bug, not bad input).
  AnalysisReport report(bool cross_validate) const;

 private:
  void require_ok() const;

  GroupPtr H_;
  AnalysisCaps caps_;
  HypothesisReport hypotheses_;
  std::optional<MappingTorus> torus_;
  std::vector<Automorphism> auts_;
  std::optional<OuterQuotient> out_h_;
  int phi_class_ = 0;
  std::optional<Subgroup> centralizer_;
  std::optional<Subgroup> phi_closure_;
  std::optional<AbstractGroup> out0_formula_;
  mutable std::optional<DirectOut> direct_;
};

/// Convenience wrappers matching the operation-level surface.
AbstractGroup out0_centralizer_quotient(const GroupPtr& H, const std::vector<ElementId>& phi_table,
                                        AnalysisCaps caps = AnalysisCaps{});
int out0_index(const GroupPtr& H, const std::vector<ElementId>& phi_table,
               AnalysisCaps caps = AnalysisCaps{});
AlphaMapChecks check_alpha_map(const GroupPtr& H, const std::vector<ElementId>& phi_table,
                               AnalysisCaps caps = AnalysisCaps{});
AnalysisReport cross_validate(const GroupPtr& H, const std::vector<ElementId>& phi_table,
                              AnalysisCaps caps = AnalysisCaps{});

}  // namespace torsor

#endif  // TORSOR_ANALYSIS_HPP
