#ifndef TORSOR_AUT_RELATORS_HPP
#define TORSOR_AUT_RELATORS_HPP

#include <functional>
#include <vector>

#include "torsor/free_words.hpp"

namespace torsor {

/// Automorphism generators given by generator-image words: forward[i][j] is
/// the image of generator j under the i-th automorphism, backward[i][j] its
/// image under the inverse.
struct AutGeneratorSet {
  std::vector<std::vector<FreeWord>> forward;   // u words
  std::vector<std::vector<FreeWord>> backward;  // v words

  int count() const { return static_cast<int>(forward.size()); }

  static AutGeneratorSet make(const Presentation& p, std::vector<std::vector<FreeWord>> forward,
                              std::vector<std::vector<FreeWord>> backward);
};

/// Check the load-time sanity condition: applying each automorphism and then
/// its inverse to each generator gives a word the solver certifies equal to
/// that generator. Throws ParseError on failure.
void validate_aut_generators(const AutGeneratorSet& aut, WordProblemSolver& solver);

/// Image of generator j (0-based) under the word of automorphisms psi,
/// applied left to right; +i means the i-th automorphism, -i its inverse.
/// Substitution results are freely reduced after every step; throws
/// BudgetExceeded when a reduced intermediate exceeds max_len.
FreeWord apply_aut_word(const Presentation& p, const AutGeneratorSet& aut, const FreeWord& psi,
                        int j, int max_len);

struct RelatorEmission {
  FreeWord psi;
  /// One certified derivation per presentation generator, each from the
  /// reduced comparison word down to the empty word.
  std::vector<WpOutcome> certificates;
};

/// Enumerate all words over the automorphism generators in shortlex order
/// (length first; letters ordered +1 < -1 < +2 < -2 < ...), up to the length
/// budget, and emit exactly those certified to fix every presentation
/// generator. Deterministic: identical inputs and budgets give identical
/// streams.
std::vector<RelatorEmission> enumerate_aut_relators(const Presentation& p,
                                                    const AutGeneratorSet& aut,
                                                    const WordBudgets& budgets);

/// Streaming variant used by the CLI; the sink sees emissions in order.
void enumerate_aut_relators(const Presentation& p, const AutGeneratorSet& aut,
                            const WordBudgets& budgets,
                            const std::function<void(const RelatorEmission&)>& sink);

}  // namespace torsor

#endif  // TORSOR_AUT_RELATORS_HPP
