#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "torsor/abstract_group.hpp"
#include "torsor/analysis.hpp"
#include "torsor/aut_relators.hpp"
#include "torsor/automorphism.hpp"
#include "torsor/errors.hpp"
#include "torsor/finite_group.hpp"
#include "torsor/free_words.hpp"
#include "torsor/json_io.hpp"
#include "torsor/mapping_torus.hpp"
#include "torsor/permutation.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// Exact conversion between python ints and the arbitrary-precision
// t-exponent type, via decimal strings.
template <>
struct type_caster<torsor::BigInt> {
  PYBIND11_TYPE_CASTER(torsor::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    object s = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!s) return false;
    value = torsor::BigInt(std::string(str(s)));
    return true;
  }

  static handle cast(const torsor::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace torsor;

std::string report_json_string(const AnalysisReport& r) { return report_to_json(r).dump(2); }

}  // namespace

PYBIND11_MODULE(_torsor, m) {
  m.doc() = "outer automorphism groups of mapping tori of finite groups";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<NotCentralizing>(m, "NotCentralizing");
  py::register_exception<NotReversing>(m, "NotReversing");
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation");
  py::register_exception<CrossValidationError>(m, "CrossValidationError");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images", &Permutation::images)
      .def("then", &Permutation::then)
      .def("inverse", &Permutation::inverse)
      .def("is_identity", &Permutation::is_identity)
      .def("__getitem__", [](const Permutation& p, int i) { return p[i]; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; });

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "FiniteGroup")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("degree", &FiniteGroup::degree)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("commutator", &FiniteGroup::commutator)
      .def("conjugate", &FiniteGroup::conjugate)
      .def("element_order", &FiniteGroup::element_order)
      .def("center", &FiniteGroup::center)
      .def("centralizer", &FiniteGroup::centralizer)
      .def("conjugacy_test", &FiniteGroup::conjugacy_test)
      .def("class_size", &FiniteGroup::class_size)
      .def("element", &FiniteGroup::element)
      .def("id_of", &FiniteGroup::id_of)
      .def("generator_ids", &FiniteGroup::generator_ids)
      .def("word_for", &FiniteGroup::word_for)
      .def("eval_word", &FiniteGroup::eval_word);

  m.def(
      "make_group",
      [](std::string name, int degree, std::vector<Permutation> gens, int cap) {
        return std::const_pointer_cast<FiniteGroup>(
            make_group(std::move(name), degree, std::move(gens), cap));
      },
      py::arg("name"), py::arg("degree"), py::arg("generators"),
      py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "parse_group",
      [](const std::string& text, int cap) {
        return std::const_pointer_cast<FiniteGroup>(parse_group(text, cap));
      },
      py::arg("text"), py::arg("element_cap") = kDefaultElementCap);
  m.def(
      "load_group",
      [](const std::string& path, int cap) {
        return std::const_pointer_cast<FiniteGroup>(load_group(path, cap));
      },
      py::arg("path"), py::arg("element_cap") = kDefaultElementCap);

  py::class_<Automorphism>(m, "Automorphism")
      .def(py::init<GroupPtr, std::vector<ElementId>>(), py::arg("group"), py::arg("table"))
      .def_static("identity", &Automorphism::identity)
      .def_property_readonly("table", &Automorphism::table)
      .def("__call__", &Automorphism::operator())
      .def("then", &Automorphism::then)
      .def("inverse", &Automorphism::inverse)
      .def("order", &Automorphism::order)
      .def("is_identity", &Automorphism::is_identity)
      .def("__eq__", [](const Automorphism& a, const Automorphism& b) { return a == b; });

  m.def("is_automorphism_table",
        [](const std::shared_ptr<FiniteGroup>& G, const std::vector<ElementId>& t) {
          return is_automorphism_table(*G, t);
        });
  m.def("inner", &inner, py::arg("group"), py::arg("g"));
  m.def("compute_aut", &compute_aut, py::arg("group"),
        py::arg("element_cap") = kDefaultElementCap);

  py::class_<AbstractGroup>(m, "AbstractGroup")
      .def(py::init<int, std::vector<int>>(), py::arg("order"), py::arg("mul_table"))
      .def_property_readonly("order", &AbstractGroup::order)
      .def("mul", &AbstractGroup::mul)
      .def("inv", &AbstractGroup::inv)
      .def("abelian", &AbstractGroup::abelian)
      .def("element_order", &AbstractGroup::element_order)
      .def("order_histogram", &AbstractGroup::order_histogram)
      .def("identify", &AbstractGroup::identify)
      .def_static("trivial", &AbstractGroup::trivial)
      .def_static("cyclic", &AbstractGroup::cyclic)
      .def_static("from_finite_group",
                  [](const std::shared_ptr<FiniteGroup>& G) {
                    return AbstractGroup::from_finite_group(*G);
                  });

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("group", &Subgroup::group)
      .def_readonly("embedding", &Subgroup::embedding);

  py::class_<QuotientResult>(m, "QuotientResult")
      .def_readonly("group", &QuotientResult::group)
      .def_readonly("coset_of", &QuotientResult::coset_of);

  m.def("out_centralizer", &out_centralizer);
  m.def("cyclic_closure", &cyclic_closure);
  m.def("quotient", &quotient);
  m.def("iso_test", &iso_test);
  m.def("out_conjugacy_test", &out_conjugacy_test);

  py::class_<OuterQuotient>(m, "OuterQuotient")
      .def(py::init<GroupPtr, const std::vector<Automorphism>&>())
      .def_property_readonly("group", &OuterQuotient::group)
      .def_property_readonly("reps", &OuterQuotient::reps)
      .def("class_of", &OuterQuotient::class_of)
      .def("canonical_rep", &OuterQuotient::canonical_rep)
      .def_property_readonly("inn_order", &OuterQuotient::inn_order);

  m.def("project_out", &project_out);

  py::class_<TorusElement>(m, "TorusElement")
      .def(py::init([](ElementId h, const BigInt& k) { return TorusElement{h, k}; }),
           py::arg("h"), py::arg("k") = BigInt(0))
      .def_readonly("h", &TorusElement::h)
      .def_property_readonly("k", [](const TorusElement& x) { return x.k; })
      .def("__eq__", [](const TorusElement& a, const TorusElement& b) { return a == b; });

  py::class_<MappingTorus>(m, "MappingTorus")
      .def(py::init<GroupPtr, Automorphism>(), py::arg("base"), py::arg("phi"))
      .def_property_readonly("phi", &MappingTorus::phi)
      .def_property_readonly("phi_order", &MappingTorus::phi_order)
      .def("mul", &MappingTorus::mul)
      .def("inv", &MappingTorus::inv)
      .def("torsion", &MappingTorus::torsion)
      .def("phi_pow", &MappingTorus::phi_pow);

  py::class_<TorusAut>(m, "TorusAut")
      .def(py::init<const MappingTorus&, Automorphism, ElementId, int>(), py::arg("torus"),
           py::arg("base_aut"), py::arg("twist"), py::arg("eps"))
      .def_property_readonly("base_aut", &TorusAut::base_aut)
      .def_property_readonly("twist", &TorusAut::twist)
      .def_property_readonly("eps", &TorusAut::eps)
      .def("__eq__", [](const TorusAut& a, const TorusAut& b) { return a == b; });

  py::enum_<AutKind>(m, "AutKind").value("Alpha", AutKind::Alpha).value("Zeta", AutKind::Zeta);

  py::class_<ClassifiedAut>(m, "ClassifiedAut")
      .def_readonly("kind", &ClassifiedAut::kind)
      .def_readonly("base_aut", &ClassifiedAut::base_aut);

  m.def("preserves_relation", &preserves_relation);
  m.def("alpha_twist", &alpha_twist);
  m.def("build_alpha", &build_alpha);
  m.def("zeta_twist", &zeta_twist);
  m.def("build_zeta", &build_zeta);
  m.def("apply", &apply);
  m.def("compose", &compose);
  m.def("invert", &invert);
  m.def("torus_inner", &torus_inner);
  m.def("inner_equivalent", &inner_equivalent);
  m.def("classify", &classify);

  py::class_<DirectOut>(m, "DirectOut")
      .def_property_readonly("out", &DirectOut::out)
      .def_property_readonly("out0", &DirectOut::out0)
      .def_property_readonly("index", &DirectOut::index)
      .def_property_readonly("reps", &DirectOut::reps)
      .def_property_readonly("out0_ids", &DirectOut::out0_ids)
      .def("class_of", &DirectOut::class_of);

  m.def("enumerate_out_direct", &enumerate_out_direct, py::arg("torus"),
        py::arg("enumeration_cap") = 1000000);

  py::class_<HypothesisReport>(m, "HypothesisReport")
      .def_readonly("trivial_center", &HypothesisReport::trivial_center)
      .def_readonly("no_epi_onto_z", &HypothesisReport::no_epi_onto_z)
      .def_readonly("no_epi_justification", &HypothesisReport::no_epi_justification)
      .def_readonly("phi_valid", &HypothesisReport::phi_valid)
      .def("ok", &HypothesisReport::ok);

  py::class_<AlphaMapChecks>(m, "AlphaMapChecks")
      .def_readonly("well_defined", &AlphaMapChecks::well_defined)
      .def_readonly("homomorphism", &AlphaMapChecks::homomorphism)
      .def_readonly("surjective", &AlphaMapChecks::surjective)
      .def_readonly("kernel_is_phi_closure", &AlphaMapChecks::kernel_is_phi_closure)
      .def_readonly("counterexample", &AlphaMapChecks::counterexample)
      .def("all", &AlphaMapChecks::all);

  py::class_<GroupSummary>(m, "GroupSummary")
      .def_readonly("order", &GroupSummary::order)
      .def_readonly("abelian", &GroupSummary::abelian)
      .def_readonly("order_histogram", &GroupSummary::order_histogram)
      .def_readonly("catalog", &GroupSummary::catalog);

  py::class_<AnalysisCaps>(m, "AnalysisCaps")
      .def(py::init([](int element_cap, long long enum_cap) {
             return AnalysisCaps{element_cap, enum_cap};
           }),
           py::arg("element_cap") = kDefaultElementCap, py::arg("enum_cap") = 1000000)
      .def_readwrite("element_cap", &AnalysisCaps::element_cap)
      .def_readwrite("enum_cap", &AnalysisCaps::enum_cap);

  py::class_<AnalysisReport>(m, "AnalysisReport")
      .def_readonly("hypotheses", &AnalysisReport::hypotheses)
      .def_readonly("group_name", &AnalysisReport::group_name)
      .def_readonly("group_order", &AnalysisReport::group_order)
      .def_readonly("aut_order", &AnalysisReport::aut_order)
      .def_readonly("inn_order", &AnalysisReport::inn_order)
      .def_readonly("out_order", &AnalysisReport::out_order)
      .def_readonly("out_catalog", &AnalysisReport::out_catalog)
      .def_readonly("centralizer_order", &AnalysisReport::centralizer_order)
      .def_readonly("cyclic_phi_order", &AnalysisReport::cyclic_phi_order)
      .def_readonly("formula_out0", &AnalysisReport::formula_out0)
      .def_readonly("index", &AnalysisReport::index)
      .def_readonly("phi_conjugate_to_inverse", &AnalysisReport::phi_conjugate_to_inverse)
      .def_readonly("predicted_out_order", &AnalysisReport::predicted_out_order)
      .def_readonly("direct_out0", &AnalysisReport::direct_out0)
      .def_readonly("direct_out", &AnalysisReport::direct_out)
      .def_readonly("direct_index", &AnalysisReport::direct_index)
      .def_readonly("zeta_exists", &AnalysisReport::zeta_exists)
      .def_readonly("alpha_map", &AnalysisReport::alpha_map)
      .def_readonly("iso_witness", &AnalysisReport::iso_witness)
      .def("to_json", &report_json_string);

  py::class_<TorusAnalysis>(m, "TorusAnalysis")
      .def(py::init<GroupPtr, const std::vector<ElementId>&, AnalysisCaps>(), py::arg("group"),
           py::arg("phi_table"), py::arg("caps") = AnalysisCaps{})
      .def_property_readonly("hypotheses", &TorusAnalysis::hypotheses)
      .def_property_readonly("out0_formula", &TorusAnalysis::out0_formula)
      .def_property_readonly("centralizer", &TorusAnalysis::centralizer)
      .def_property_readonly("phi_closure", &TorusAnalysis::phi_closure)
      .def("out0_index", &TorusAnalysis::out0_index)
      .def("phi_conjugate_to_inverse", &TorusAnalysis::phi_conjugate_to_inverse)
      .def("zeta_exists", &TorusAnalysis::zeta_exists)
      .def("alpha_map_checks", &TorusAnalysis::alpha_map_checks)
      .def("report", &TorusAnalysis::report, py::arg("cross_validate"));

  m.def("check_hypotheses",
        [](const std::shared_ptr<FiniteGroup>& G, const std::vector<ElementId>& phi) {
          return check_hypotheses(G, phi);
        });
  m.def("out0_centralizer_quotient", &out0_centralizer_quotient, py::arg("group"),
        py::arg("phi_table"), py::arg("caps") = AnalysisCaps{});
  m.def("out0_index", &out0_index, py::arg("group"), py::arg("phi_table"),
        py::arg("caps") = AnalysisCaps{});
  m.def("check_alpha_map", &check_alpha_map, py::arg("group"), py::arg("phi_table"),
        py::arg("caps") = AnalysisCaps{});
  m.def("cross_validate", &cross_validate, py::arg("group"), py::arg("phi_table"),
        py::arg("caps") = AnalysisCaps{});

  // Free words and relator enumeration.
  m.def("free_reduce", &free_reduce);
  m.def("invert_word", &invert_word);

  py::class_<Presentation>(m, "Presentation")
      .def(py::init(&Presentation::make), py::arg("generators"), py::arg("relators"))
      .def_readonly("generators", &Presentation::generators)
      .def_readonly("relators", &Presentation::relators);

  py::class_<WordBudgets>(m, "WordBudgets")
      .def(py::init([](int max_len, long long max_states) {
             return WordBudgets{max_len, max_states};
           }),
           py::arg("max_len") = 8, py::arg("max_states") = 1000000)
      .def_readwrite("max_len", &WordBudgets::max_len)
      .def_readwrite("max_states", &WordBudgets::max_states);

  py::enum_<WpResult>(m, "WpResult").value("Yes", WpResult::Yes).value("Unknown", WpResult::Unknown);

  py::class_<WpOutcome>(m, "WpOutcome")
      .def_readonly("result", &WpOutcome::result)
      .def_readonly("derivation", &WpOutcome::derivation);

  py::class_<WordProblemSolver>(m, "WordProblemSolver")
      .def(py::init<Presentation, WordBudgets>(), py::arg("presentation"), py::arg("budgets"))
      .def("solve", &WordProblemSolver::solve);

  py::class_<AutGeneratorSet>(m, "AutGeneratorSet")
      .def(py::init(&AutGeneratorSet::make), py::arg("presentation"), py::arg("forward"),
           py::arg("backward"))
      .def_readonly("forward", &AutGeneratorSet::forward)
      .def_readonly("backward", &AutGeneratorSet::backward)
      .def_property_readonly("count", &AutGeneratorSet::count);

  py::class_<RelatorEmission>(m, "RelatorEmission")
      .def_readonly("psi", &RelatorEmission::psi)
      .def_readonly("certificates", &RelatorEmission::certificates);

  m.def("apply_aut_word", &apply_aut_word, py::arg("presentation"), py::arg("aut"),
        py::arg("psi"), py::arg("generator"), py::arg("max_len"));
  m.def("enumerate_aut_relators",
        py::overload_cast<const Presentation&, const AutGeneratorSet&, const WordBudgets&>(
            &enumerate_aut_relators),
        py::arg("presentation"), py::arg("aut"), py::arg("budgets"));

  // File format loaders.
  m.def("parse_presentation", &parse_presentation);
  m.def("load_presentation",
        [](const std::string& path) { return load_presentation(path); });
  m.def("parse_aut_generators", &parse_aut_generators);
  m.def("load_aut_generators",
        [](const std::string& path, const Presentation& p) { return load_aut_generators(path, p); });
  m.def("parse_automorphism_words",
        [](const std::string& text, const std::shared_ptr<FiniteGroup>& G) {
          return parse_automorphism_words(text, *G);
        });
  m.def("load_automorphism_words",
        [](const std::string& path, const std::shared_ptr<FiniteGroup>& G) {
          return load_automorphism_words(path, *G);
        });
  m.def("load_torus_spec", [](const std::string& path, int cap) {
    LoadedTorus t = load_torus_spec(path, cap);
    return py::make_tuple(std::const_pointer_cast<FiniteGroup>(t.group), t.phi_table);
  }, py::arg("path"), py::arg("element_cap") = kDefaultElementCap);

  m.attr("__version__") = "0.1.0";
}
