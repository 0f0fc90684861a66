#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsor/analysis.hpp"
#include "torsor/errors.hpp"
#include "torsor/json_io.hpp"

using namespace torsor;

namespace {

GroupPtr load(const char* stem) {
  return load_group(std::string("catalog/") + stem + ".group.json");
}

std::vector<ElementId> identity_table(const FiniteGroup& G) {
  std::vector<ElementId> t(static_cast<std::size_t>(G.order()));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<ElementId>(i);
  return t;
}

std::vector<ElementId> phi_of(const char* stem, const FiniteGroup& G) {
  return load_automorphism_words(std::string("catalog/") + stem + ".phi.json", G);
}

}  // namespace

TEST_CASE("hypothesis checks") {
  GroupPtr s3 = load("s3");
  HypothesisReport r = check_hypotheses(s3, identity_table(*s3));
  CHECK(r.trivial_center);
  CHECK(r.no_epi_onto_z);
  CHECK(r.phi_valid);
  CHECK(r.ok());

  GroupPtr d4 = load("d4");
  HypothesisReport rd4 = check_hypotheses(d4, identity_table(*d4));
  CHECK_FALSE(rd4.trivial_center);
  CHECK_FALSE(rd4.ok());

  GroupPtr c3 = load("c3");
  CHECK_FALSE(check_hypotheses(c3, identity_table(*c3)).trivial_center);

  // a table that is not an automorphism
  std::vector<ElementId> bad = identity_table(*s3);
  std::swap(bad[1], bad[2]);
  HypothesisReport rbad = check_hypotheses(s3, bad);
  if (!is_automorphism_table(*s3, bad)) CHECK_FALSE(rbad.phi_valid);
}

TEST_CASE("refusal on failed hypotheses") {
  GroupPtr d4 = load("d4");
  TorusAnalysis analysis(d4, identity_table(*d4));
  CHECK_FALSE(analysis.hypotheses().ok());
  CHECK_THROWS_AS(analysis.out0_formula(), HypothesisViolation);
  CHECK_THROWS_AS(analysis.out0_index(), HypothesisViolation);
  CHECK_THROWS_AS(analysis.direct(), HypothesisViolation);
  AnalysisReport r = analysis.report(true);
  CHECK_FALSE(r.hypotheses.ok());
  CHECK_FALSE(r.direct_out0.has_value());
}

TEST_CASE("formula side on catalog instances") {
  GroupPtr s3 = load("s3");
  CHECK(out0_centralizer_quotient(s3, identity_table(*s3)).order() == 1);

  GroupPtr d7 = load("d7");
  AbstractGroup d7_id = out0_centralizer_quotient(d7, identity_table(*d7));
  CHECK(d7_id.order() == 3);
  CHECK(d7_id.identify() == "C3");
  CHECK(out0_centralizer_quotient(d7, phi_of("d7.outer3", *d7)).order() == 1);

  GroupPtr a4 = load("a4");
  CHECK(out0_centralizer_quotient(a4, phi_of("a4.outer", *a4)).order() == 1);
}

TEST_CASE("index dichotomy") {
  GroupPtr s3 = load("s3");
  CHECK(out0_index(s3, identity_table(*s3)) == 2);
  GroupPtr d5 = load("d5");
  CHECK(out0_index(d5, phi_of("d5.outer", *d5)) == 2);  // class of order 2
  GroupPtr d7 = load("d7");
  CHECK(out0_index(d7, identity_table(*d7)) == 2);
  CHECK(out0_index(d7, phi_of("d7.outer3", *d7)) == 1);  // order 3 in abelian Out
}

TEST_CASE("centralizer map checks pass elementwise") {
  GroupPtr s3 = load("s3");
  AlphaMapChecks c = check_alpha_map(s3, identity_table(*s3));
  CHECK(c.well_defined);
  CHECK(c.homomorphism);
  CHECK(c.surjective);
  CHECK(c.kernel_is_phi_closure);
  CHECK(c.all());
  CHECK(c.counterexample.empty());

  GroupPtr d7 = load("d7");
  CHECK(check_alpha_map(d7, phi_of("d7.outer3", *d7)).all());
}

TEST_CASE("the twisting class maps to the identity class") {
  GroupPtr d7 = load("d7");
  TorusAnalysis analysis(d7, phi_of("d7.outer3", *d7));
  const MappingTorus& M = analysis.torus();
  TorusAut ident(M, Automorphism::identity(d7), 0, 1);
  // alpha of phi itself is conjugation by t, hence inner
  CHECK(inner_equivalent(M, build_alpha(M, M.phi()), ident));
  // and perturbing a representative by any base inner keeps the class
  const Automorphism& rep = analysis.out_h().reps()[static_cast<std::size_t>(analysis.phi_class())];
  for (ElementId k = 0; k < d7->order(); ++k)
    CHECK(inner_equivalent(M, build_alpha(M, rep.then(inner(d7, k))), build_alpha(M, rep)));
}

TEST_CASE("cross validation end to end") {
  struct Instance {
    const char* group;
    const char* phi;  // null means identity
    int out0, out, index;
  };
  for (Instance inst : {Instance{"s3", nullptr, 1, 2, 2}, Instance{"d7", nullptr, 3, 6, 2},
                        Instance{"a4", "a4.outer", 1, 2, 2}}) {
    GroupPtr G = load(inst.group);
    std::vector<ElementId> phi =
        inst.phi == nullptr ? identity_table(*G) : phi_of(inst.phi, *G);
    AnalysisReport r = cross_validate(G, phi);
    CAPTURE(inst.group);
    REQUIRE(r.direct_out0.has_value());
    CHECK(r.formula_out0.order == inst.out0);
    CHECK(r.direct_out0->order == inst.out0);
    CHECK(r.direct_out->order == inst.out);
    CHECK(r.index == inst.index);
    CHECK(*r.direct_index == inst.index);
    CHECK(r.alpha_map->all());
    REQUIRE(r.iso_witness.has_value());
    CHECK(static_cast<int>(r.iso_witness->size()) == inst.out0);
    CHECK(r.predicted_out_order == r.direct_out->order);
  }
}

TEST_CASE("counting the map both ways") {
  // centralizer cosets of the twisting closure vs enumerated classes
  for (const char* stem : {"s3.id", "d5.id", "d5.outer", "d7.id", "d7.outer3", "a4.id"}) {
    LoadedTorus spec = load_torus_spec(std::string("catalog/") + stem + ".torus.json");
    TorusAnalysis analysis(spec.group, spec.phi_table);
    REQUIRE(analysis.hypotheses().ok());
    CAPTURE(stem);
    CHECK(analysis.centralizer().group.order() ==
          analysis.out0_formula().order() * analysis.phi_closure().group.order());
    CHECK(analysis.out0_formula().order() == analysis.direct().out0().order());
  }
}

TEST_CASE("replacing the twist inside its class changes nothing") {
  GroupPtr d5 = load("d5");
  std::vector<ElementId> phi = phi_of("d5.outer", *d5);
  AnalysisReport base = cross_validate(d5, phi);
  Automorphism a(d5, phi);
  for (ElementId k : {1, 3, 7}) {
    Automorphism perturbed = a.then(inner(d5, k));
    AnalysisReport r = cross_validate(d5, perturbed.table());
    CHECK(r.formula_out0.order == base.formula_out0.order);
    CHECK(r.index == base.index);
    CHECK(r.direct_out0->order == base.direct_out0->order);
    CHECK(iso_test(AbstractGroup::cyclic(1), AbstractGroup::trivial()).has_value());
    CHECK(r.formula_out0.catalog == base.formula_out0.catalog);
  }
}

TEST_CASE("zeta existence is reported consistently") {
  GroupPtr d7 = load("d7");
  TorusAnalysis with_id(d7, identity_table(*d7));
  CHECK(with_id.zeta_exists());
  CHECK(with_id.phi_conjugate_to_inverse());
  TorusAnalysis with_outer(d7, phi_of("d7.outer3", *d7));
  CHECK_FALSE(with_outer.zeta_exists());
  CHECK_FALSE(with_outer.phi_conjugate_to_inverse());
}
