#include "torsor/analysis.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

HypothesisReport check_hypotheses(const GroupPtr& H, const std::vector<ElementId>& phi_table) {
  HypothesisReport r;
  r.trivial_center = H->center().size() == 1;
  r.no_epi_onto_z = true;
  r.no_epi_justification =
      "base group is finite, so every homomorphism onto the integers is trivial";
  r.phi_valid = is_automorphism_table(*H, phi_table);
  return r;
}

GroupSummary GroupSummary::of(const AbstractGroup& g) {
  return GroupSummary{g.order(), g.abelian(), g.order_histogram(), g.identify()};
}

TorusAnalysis::TorusAnalysis(GroupPtr H, const std::vector<ElementId>& phi_table,
                             AnalysisCaps caps)
    : H_(std::move(H)), caps_(caps), hypotheses_(check_hypotheses(H_, phi_table)) {
  if (!hypotheses_.ok()) return;
  Automorphism phi(H_, phi_table);
  torus_.emplace(H_, phi);
  auts_ = compute_aut(H_, caps_.element_cap);
  out_h_.emplace(H_, auts_);
  phi_class_ = out_h_->class_of(phi);
  centralizer_ = out_centralizer(out_h_->group(), phi_class_);
  phi_closure_ = cyclic_closure(out_h_->group(), phi_class_);

  // Locate the twisting class inside its centralizer and quotient there.
  const std::vector<int>& members = centralizer_->embedding;
  auto it = std::find(members.begin(), members.end(), phi_class_);
  int phi_in_c = static_cast<int>(it - members.begin());
  Subgroup cyc_in_c = cyclic_closure(centralizer_->group, phi_in_c);
  out0_formula_ = quotient(centralizer_->group, cyc_in_c.embedding).group;
}

void TorusAnalysis::require_ok() const {
  if (!hypotheses_.ok())
    throw HypothesisViolation(
        "analysis preconditions fail: trivial center or valid twisting automorphism missing");
}

const MappingTorus& TorusAnalysis::torus() const {
  require_ok();
  return *torus_;
}

const OuterQuotient& TorusAnalysis::out_h() const {
  require_ok();
  return *out_h_;
}

int TorusAnalysis::phi_class() const {
  require_ok();
  return phi_class_;
}

const AbstractGroup& TorusAnalysis::out0_formula() const {
  require_ok();
  return *out0_formula_;
}

const Subgroup& TorusAnalysis::centralizer() const {
  require_ok();
  return *centralizer_;
}

const Subgroup& TorusAnalysis::phi_closure() const {
  require_ok();
  return *phi_closure_;
}

bool TorusAnalysis::phi_conjugate_to_inverse() const {
  require_ok();
  const AbstractGroup& out = out_h_->group();
  return out_conjugacy_test(out, phi_class_, out.inv(phi_class_)).has_value();
}

int TorusAnalysis::out0_index() const { return phi_conjugate_to_inverse() ? 2 : 1; }

bool TorusAnalysis::zeta_exists() const {
  require_ok();
  for (const Automorphism& delta : auts_)
    if (zeta_twist(*torus_, delta)) return true;
  return false;
}

const DirectOut& TorusAnalysis::direct() const {
  require_ok();
  if (!direct_) direct_.emplace(*torus_, caps_.enum_cap);
  return *direct_;
}

namespace {

// Position of an out0 class (by out id) inside the out0 id list.
int out0_position(const DirectOut& d, int out_id) {
  const std::vector<int>& ids = d.out0_ids();
  auto it = std::find(ids.begin(), ids.end(), out_id);
  if (it == ids.end())
    throw CrossValidationError("orientation-preserving image lands outside the subgroup");
  return static_cast<int>(it - ids.begin());
}

}  // namespace

AlphaMapChecks TorusAnalysis::alpha_map_checks() const {
  require_ok();
  const MappingTorus& M = *torus_;
  const DirectOut& d = direct();
  const Subgroup& C = *centralizer_;
  const int c_order = C.group.order();

  AlphaMapChecks checks;
  std::vector<int> image(static_cast<std::size_t>(c_order));
  for (int ci = 0; ci < c_order; ++ci) {
    const Automorphism& rep = out_h_->reps()[static_cast<std::size_t>(C.embedding[static_cast<std::size_t>(ci)])];
    image[static_cast<std::size_t>(ci)] = out0_position(d, d.class_of(M, build_alpha(M, rep)));
  }

  // Well-definedness: perturbing the representative by any inner
  // automorphism of the base lands in the same class.
  checks.well_defined = true;
  for (int ci = 0; ci < c_order && checks.well_defined; ++ci) {
    const Automorphism& rep = out_h_->reps()[static_cast<std::size_t>(C.embedding[static_cast<std::size_t>(ci)])];
    for (ElementId k = 0; k < H_->order(); ++k) {
      Automorphism perturbed = rep.then(inner(H_, k));
      int cls = out0_position(d, d.class_of(M, build_alpha(M, perturbed)));
      if (cls != image[static_cast<std::size_t>(ci)]) {
        checks.well_defined = false;
        checks.counterexample = "inner perturbation by element " + std::to_string(k) +
                                " moves the image of centralizer member " + std::to_string(ci);
        break;
      }
    }
  }

  checks.homomorphism = true;
  for (int ci = 0; ci < c_order && checks.homomorphism; ++ci)
    for (int cj = 0; cj < c_order; ++cj) {
      int lhs = d.out0().mul(image[static_cast<std::size_t>(ci)], image[static_cast<std::size_t>(cj)]);
      int rhs = image[static_cast<std::size_t>(C.group.mul(ci, cj))];
      if (lhs != rhs) {
        checks.homomorphism = false;
        checks.counterexample = "product of centralizer members " + std::to_string(ci) + "," +
                                std::to_string(cj) + " maps inconsistently";
        break;
      }
    }

  std::set<int> hit(image.begin(), image.end());
  checks.surjective = static_cast<int>(hit.size()) == d.out0().order();
  if (!checks.surjective && checks.counterexample.empty())
    checks.counterexample = "some enumerated class has no centralizer preimage";

  std::set<int> kernel;
  for (int ci = 0; ci < c_order; ++ci)
    if (image[static_cast<std::size_t>(ci)] == 0) kernel.insert(ci);
  std::set<int> expected;
  for (int out_id : phi_closure_->embedding) {
    auto it = std::find(C.embedding.begin(), C.embedding.end(), out_id);
    if (it != C.embedding.end()) expected.insert(static_cast<int>(it - C.embedding.begin()));
  }
  checks.kernel_is_phi_closure = kernel == expected;
  if (!checks.kernel_is_phi_closure && checks.counterexample.empty())
    checks.counterexample = "kernel does not match the powers of the twisting class";

  return checks;
}

AnalysisReport TorusAnalysis::report(bool run_cross_validation) const {
  AnalysisReport r;
  r.hypotheses = hypotheses_;
  r.group_name = H_->name();
  r.group_order = H_->order();
  r.group_degree = H_->degree();
  if (!hypotheses_.ok()) return r;

  r.aut_order = static_cast<int>(auts_.size());
  r.inn_order = out_h_->inn_order();
  r.out_order = out_h_->group().order();
  r.out_catalog = out_h_->group().identify();
  r.phi_aut_order = torus_->phi_order();
  r.phi_class_order = out_h_->group().element_order(phi_class_);
  r.centralizer_order = centralizer_->group.order();
  r.cyclic_phi_order = phi_closure_->group.order();
  r.formula_out0 = GroupSummary::of(*out0_formula_);
  r.phi_conjugate_to_inverse = phi_conjugate_to_inverse();
  r.index = r.phi_conjugate_to_inverse ? 2 : 1;
  r.predicted_out_order = r.index * out0_formula_->order();
  if (!run_cross_validation) return r;

  const DirectOut& d = direct();
  r.direct_out0 = GroupSummary::of(d.out0());
  r.direct_out = GroupSummary::of(d.out());
  r.direct_index = d.index();
  r.zeta_exists = zeta_exists();
  r.alpha_map = alpha_map_checks();

  if (*r.zeta_exists != r.phi_conjugate_to_inverse)
    throw CrossValidationError(
        "orientation-reversing existence disagrees with the conjugacy dichotomy");
  if (d.index() != r.index)
    throw CrossValidationError("enumerated index disagrees with the conjugacy dichotomy");
  if (d.out().order() != d.index() * d.out0().order())
    throw CrossValidationError("enumerated orders violate the index relation");
  if (!r.alpha_map->all())
    throw CrossValidationError("centralizer map check failed: " + r.alpha_map->counterexample);

  std::optional<std::vector<int>> witness = iso_test(*out0_formula_, d.out0());
  if (!witness)
    throw CrossValidationError(
        "no isomorphism between the centralizer quotient and the enumerated classes");
  r.iso_witness = std::move(witness);
  return r;
}

AbstractGroup out0_centralizer_quotient(const GroupPtr& H, const std::vector<ElementId>& phi_table,
                                        AnalysisCaps caps) {
  return TorusAnalysis(H, phi_table, caps).out0_formula();
}

int out0_index(const GroupPtr& H, const std::vector<ElementId>& phi_table, AnalysisCaps caps) {
  return TorusAnalysis(H, phi_table, caps).out0_index();
}

AlphaMapChecks check_alpha_map(const GroupPtr& H, const std::vector<ElementId>& phi_table,
                               AnalysisCaps caps) {
  return TorusAnalysis(H, phi_table, caps).alpha_map_checks();
}

AnalysisReport cross_validate(const GroupPtr& H, const std::vector<ElementId>& phi_table,
                              AnalysisCaps caps) {
  return TorusAnalysis(H, phi_table, caps).report(true);
}

}  // namespace torsor
