#include "torsor/aut_relators.hpp"

#include <optional>
#include <string>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

AutGeneratorSet AutGeneratorSet::make(const Presentation& p,
                                      std::vector<std::vector<FreeWord>> forward,
                                      std::vector<std::vector<FreeWord>> backward) {
  if (forward.empty()) throw ParseError("automorphism set needs at least one generator");
  if (forward.size() != backward.size())
    throw ParseError("forward and backward image lists differ in length");
  const int n = static_cast<int>(p.generators.size());
  for (auto* side : {&forward, &backward})
    for (std::vector<FreeWord>& images : *side) {
      if (static_cast<int>(images.size()) != n)
        throw ParseError("automorphism must list one image per presentation generator");
      for (FreeWord& w : images) {
        for (int letter : w)
          if (letter == 0 || std::abs(letter) > n)
            throw ParseError("image letter out of generator range");
        w = free_reduce(w);
      }
    }
  return AutGeneratorSet{std::move(forward), std::move(backward)};
}

namespace {

// Substitute the images of one automorphism (or its inverse) into a word;
// nullopt when the reduced result exceeds the length cap.
std::optional<FreeWord> try_substitute(const AutGeneratorSet& aut, int psi_letter,
                                       const FreeWord& w, int max_len) {
  const std::vector<FreeWord>& images =
      psi_letter > 0 ? aut.forward[static_cast<std::size_t>(psi_letter - 1)]
                     : aut.backward[static_cast<std::size_t>(-psi_letter - 1)];
  FreeWord out;
  for (int letter : w) {
    const FreeWord& img = images[static_cast<std::size_t>(std::abs(letter) - 1)];
    if (letter > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      FreeWord inv = invert_word(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  out = free_reduce(out);
  if (static_cast<int>(out.size()) > max_len) return std::nullopt;
  return out;
}

}  // namespace

FreeWord apply_aut_word(const Presentation& p, const AutGeneratorSet& aut, const FreeWord& psi,
                        int j, int max_len) {
  if (j < 0 || j >= static_cast<int>(p.generators.size()))
    throw ParseError("generator index out of range");
  FreeWord w{j + 1};
  for (int letter : psi) {
    if (letter == 0 || std::abs(letter) > aut.count())
      throw ParseError("automorphism letter out of range");
    std::optional<FreeWord> next = try_substitute(aut, letter, w, max_len);
    if (!next) throw BudgetExceeded("image word exceeds length budget");
    w = std::move(*next);
  }
  return w;
}

void validate_aut_generators(const AutGeneratorSet& aut, WordProblemSolver& solver) {
  const Presentation& p = solver.presentation();
  const int max_len = solver.budgets().max_len;
  for (int i = 1; i <= aut.count(); ++i) {
    for (int j = 0; j < static_cast<int>(p.generators.size()); ++j) {
      FreeWord w;
      try {
        w = apply_aut_word(p, aut, FreeWord{i, -i}, j, max_len);
      } catch (const BudgetExceeded&) {
        throw ParseError("automorphism sanity image for generator " + std::to_string(j + 1) +
                         " exceeds the length budget");
      }
      w.push_back(-(j + 1));
      if (solver.solve(free_reduce(w)).result != WpResult::Yes)
        throw ParseError("automorphism " + std::to_string(i) +
                         " composed with its inverse does not provably fix generator " +
                         std::to_string(j + 1));
    }
  }
}

namespace {

// Shortlex successor over letters +1 < -1 < +2 < -2 < ... < +m < -m.
int letter_at_rank(int rank) { return rank % 2 == 0 ? rank / 2 + 1 : -(rank / 2 + 1); }

}  // namespace

void enumerate_aut_relators(const Presentation& p, const AutGeneratorSet& aut,
                            const WordBudgets& budgets,
                            const std::function<void(const RelatorEmission&)>& sink) {
  const int m = aut.count();
  const int n = static_cast<int>(p.generators.size());
  if (budgets.max_len <= 0) return;  // nothing can be enumerated or certified
  WordProblemSolver solver(p, budgets);
  validate_aut_generators(aut, solver);

  // Depth-first over prefixes so each extension costs one substitution per
  // generator; once a prefix overruns the length cap, every extension would
  // fail at that same step, so the whole subtree is skipped.
  std::vector<int> psi;
  std::vector<std::vector<FreeWord>> image_stack(1);
  image_stack[0].resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) image_stack[0][static_cast<std::size_t>(j)] = FreeWord{j + 1};

  auto walk = [&](auto&& self, int target_len) -> void {
    const int depth = static_cast<int>(psi.size());
    if (depth == target_len) {
      std::vector<WpOutcome> certs;
      certs.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        FreeWord comparison = image_stack[static_cast<std::size_t>(depth)][static_cast<std::size_t>(j)];
        comparison.push_back(-(j + 1));
        WpOutcome outcome = solver.solve(free_reduce(comparison));
        if (outcome.result != WpResult::Yes) return;
        certs.push_back(std::move(outcome));
      }
      sink(RelatorEmission{psi, std::move(certs)});
      return;
    }
    for (int rank = 0; rank < 2 * m; ++rank) {
      int letter = letter_at_rank(rank);
      std::vector<FreeWord> next(static_cast<std::size_t>(n));
      bool alive = true;
      for (int j = 0; j < n && alive; ++j) {
        std::optional<FreeWord> img = try_substitute(
            aut, letter, image_stack[static_cast<std::size_t>(depth)][static_cast<std::size_t>(j)],
            budgets.max_len);
        if (!img)
          alive = false;
        else
          next[static_cast<std::size_t>(j)] = std::move(*img);
      }
      if (!alive) continue;
      psi.push_back(letter);
      image_stack.push_back(std::move(next));
      self(self, target_len);
      image_stack.pop_back();
      psi.pop_back();
    }
  };

  for (int length = 1; length <= budgets.max_len; ++length) walk(walk, length);
}

std::vector<RelatorEmission> enumerate_aut_relators(const Presentation& p,
                                                    const AutGeneratorSet& aut,
                                                    const WordBudgets& budgets) {
  std::vector<RelatorEmission> out;
  enumerate_aut_relators(p, aut, budgets,
                         [&](const RelatorEmission& e) { out.push_back(e); });
  return out;
}

}  // namespace torsor
