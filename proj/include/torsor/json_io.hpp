#ifndef TORSOR_JSON_IO_HPP
#define TORSOR_JSON_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsor/analysis.hpp"
#include "torsor/aut_relators.hpp"
#include "torsor/finite_group.hpp"
#include "torsor/free_words.hpp"

namespace torsor {

/// Group file: {"name": str, "degree": int, "generators": [[int,...],...]},
/// each generator listing the images of points 0..degree-1.
GroupPtr parse_group(const std::string& text, int element_cap = kDefaultElementCap);
GroupPtr load_group(const std::filesystem::path& path, int element_cap = kDefaultElementCap);

/// Automorphism file: {"images": [[int,...],...]} — one word per group
/// generator over the generators (+j = generator j-1, -j its inverse).
/// The returned table is the induced endomorphism; it is not required to be
/// an automorphism (validity is the analysis pipeline's concern).
std::vector<ElementId> parse_automorphism_words(const std::string& text, const FiniteGroup& G);
std::vector<ElementId> load_automorphism_words(const std::filesystem::path& path,
                                               const FiniteGroup& G);

/// Torus spec file: {"group": path, "phi": path}, paths relative to the
/// spec file's directory.
struct LoadedTorus {
  GroupPtr group;
  std::vector<ElementId> phi_table;
};
LoadedTorus load_torus_spec(const std::filesystem::path& path,
                            int element_cap = kDefaultElementCap);

/// Presentation file: {"generators": ["x","y"], "relators": [[1,1,1],...]}.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::filesystem::path& path);

/// Automorphism-generator file: {"u": [[word,...],...], "v": [[word,...],...]}.
AutGeneratorSet parse_aut_generators(const std::string& text, const Presentation& p);
AutGeneratorSet load_aut_generators(const std::filesystem::path& path, const Presentation& p);

std::string read_file(const std::filesystem::path& path);

nlohmann::json report_to_json(const AnalysisReport& r);
nlohmann::json group_summary_to_json(const GroupSummary& s);

}  // namespace torsor

#endif  // TORSOR_JSON_IO_HPP
