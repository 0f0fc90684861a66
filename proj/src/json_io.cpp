#include "torsor/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<FreeWord> word_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of words");
  std::vector<FreeWord> out;
  out.reserve(j.size());
  for (const json& w : j) out.push_back(int_list(w, what));
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupPtr parse_group(const std::string& text, int element_cap) {
  json j = parse_json(text);
  if (!field(j, "name").is_string()) throw ParseError("\"name\" must be a string");
  std::string name = j.at("name").get<std::string>();
  if (!field(j, "degree").is_number_integer()) throw ParseError("\"degree\" must be an integer");
  int degree = j.at("degree").get<int>();
  const json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw ParseError("\"generators\" must be a nonempty array");
  std::vector<Permutation> generators;
  generators.reserve(gens.size());
  for (const json& g : gens) {
    std::vector<int> images = int_list(g, "generator");
    if (static_cast<int>(images.size()) != degree)
      throw ParseError("generator length does not match degree");
    generators.emplace_back(std::move(images));
  }
  return make_group(std::move(name), degree, std::move(generators), element_cap);
}

GroupPtr load_group(const std::filesystem::path& path, int element_cap) {
  return parse_group(read_file(path), element_cap);
}

std::vector<ElementId> parse_automorphism_words(const std::string& text, const FiniteGroup& G) {
  json j = parse_json(text);
  std::vector<FreeWord> words = word_list(field(j, "images"), "images");
  if (words.size() != G.generators().size())
    throw ParseError("automorphism file must give one image word per group generator");
  std::vector<ElementId> gen_images;
  gen_images.reserve(words.size());
  for (const FreeWord& w : words) gen_images.push_back(G.eval_word(w));
  // Induced endomorphism via the BFS spanning tree.
  std::vector<ElementId> table(static_cast<std::size_t>(G.order()));
  table[0] = 0;
  for (ElementId a = 1; a < G.order(); ++a) {
    auto [parent, gen] = G.tree_edge(a);
    table[static_cast<std::size_t>(a)] =
        G.mul(table[static_cast<std::size_t>(parent)], gen_images[static_cast<std::size_t>(gen)]);
  }
  return table;
}

std::vector<ElementId> load_automorphism_words(const std::filesystem::path& path,
                                               const FiniteGroup& G) {
  return parse_automorphism_words(read_file(path), G);
}

LoadedTorus load_torus_spec(const std::filesystem::path& path, int element_cap) {
  json j = parse_json(read_file(path));
  const json& group_field = field(j, "group");
  const json& phi_field = field(j, "phi");
  if (!group_field.is_string() || !phi_field.is_string())
    throw ParseError("\"group\" and \"phi\" must be file paths");
  std::filesystem::path dir = path.parent_path();
  GroupPtr group = load_group(dir / group_field.get<std::string>(), element_cap);
  std::vector<ElementId> phi = load_automorphism_words(dir / phi_field.get<std::string>(), *group);
  return LoadedTorus{std::move(group), std::move(phi)};
}

Presentation parse_presentation(const std::string& text) {
  json j = parse_json(text);
  const json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw ParseError("\"generators\" must be a nonempty array of names");
  std::vector<std::string> names;
  names.reserve(gens.size());
  for (const json& g : gens) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<FreeWord> relators = word_list(field(j, "relators"), "relators");
  return Presentation::make(std::move(names), std::move(relators));
}

Presentation load_presentation(const std::filesystem::path& path) {
  return parse_presentation(read_file(path));
}

AutGeneratorSet parse_aut_generators(const std::string& text, const Presentation& p) {
  json j = parse_json(text);
  const json& u = field(j, "u");
  const json& v = field(j, "v");
  if (!u.is_array() || !v.is_array()) throw ParseError("\"u\" and \"v\" must be arrays");
  std::vector<std::vector<FreeWord>> forward, backward;
  for (const json& images : u) forward.push_back(word_list(images, "u"));
  for (const json& images : v) backward.push_back(word_list(images, "v"));
  return AutGeneratorSet::make(p, std::move(forward), std::move(backward));
}

AutGeneratorSet load_aut_generators(const std::filesystem::path& path, const Presentation& p) {
  return parse_aut_generators(read_file(path), p);
}

nlohmann::json group_summary_to_json(const GroupSummary& s) {
  json hist = json::object();
  for (const auto& [ord, count] : s.order_histogram) hist[std::to_string(ord)] = count;
  return json{{"order", s.order},
              {"abelian", s.abelian},
              {"order_histogram", hist},
              {"catalog", s.catalog}};
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = 1;
  j["group"] = {{"name", r.group_name}, {"order", r.group_order}, {"degree", r.group_degree}};
  j["hypotheses"] = {{"trivial_center", r.hypotheses.trivial_center},
                     {"no_epi_onto_z", r.hypotheses.no_epi_onto_z},
                     {"no_epi_justification", r.hypotheses.no_epi_justification},
                     {"phi_valid", r.hypotheses.phi_valid}};
  if (!r.hypotheses.ok()) return j;

  j["out_h"] = {{"aut_order", r.aut_order},
                {"inn_order", r.inn_order},
                {"out_order", r.out_order},
                {"catalog", r.out_catalog}};
  j["phi"] = {{"aut_order", r.phi_aut_order}, {"class_order", r.phi_class_order}};
  j["formula"] = {{"centralizer_order", r.centralizer_order},
                  {"cyclic_phi_order", r.cyclic_phi_order},
                  {"out0", group_summary_to_json(r.formula_out0)},
                  {"index", r.index},
                  {"phi_conjugate_to_inverse", r.phi_conjugate_to_inverse},
                  {"predicted_out_order", r.predicted_out_order}};
  if (r.direct_out0) {
    json cv;
    cv["out0"] = group_summary_to_json(*r.direct_out0);
    cv["out"] = group_summary_to_json(*r.direct_out);
    cv["index"] = *r.direct_index;
    cv["zeta_exists"] = *r.zeta_exists;
    cv["alpha_map"] = {{"well_defined", r.alpha_map->well_defined},
                       {"homomorphism", r.alpha_map->homomorphism},
                       {"surjective", r.alpha_map->surjective},
                       {"kernel_is_phi_closure", r.alpha_map->kernel_is_phi_closure}};
    cv["iso_witness"] = *r.iso_witness;
    j["cross_validate"] = cv;
  }
  return j;
}

}  // namespace torsor
