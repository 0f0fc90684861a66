#ifndef TORSOR_FREE_WORDS_HPP
#define TORSOR_FREE_WORDS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace torsor {

/// A word in a free group: nonzero letters, +j meaning generator j-1 and
/// -j its inverse (1-based letters, matching the file formats).
using FreeWord = std::vector<int>;

/// Stack-based free reduction; idempotent and length-nonincreasing.
FreeWord free_reduce(const FreeWord& w);
FreeWord invert_word(const FreeWord& w);

/// Generators and relators. Relators are freely reduced on construction and
/// must be nonempty afterwards.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  static Presentation make(std::vector<std::string> generators, std::vector<FreeWord> relators);
};

struct WordBudgets {
  int max_len = 8;                 // cap on reduced word length, everywhere
  long long max_states = 1000000;  // cap on search states per query
};

enum class WpResult { Yes, Unknown };

/// Result of a word-problem query. When the answer is Yes, derivation holds
/// the reduced words from the query down to the empty word, one relator
/// insertion per step.
struct WpOutcome {
  WpResult result = WpResult::Unknown;
  std::vector<FreeWord> derivation;
};

/// Budgeted search for derivable triviality: breadth-first over freely
/// reduced words, where a move inserts any cyclic rotation of a relator or
/// an inverse relator at any position and then freely reduces. Sound only:
/// Yes means the word is trivial in the presented group; Unknown decides
/// nothing.
///
/// Queries are memoized per solver. The memo never changes an answer: a
/// cached Yes replays a previously found derivation, and exhaustive-failure
/// states are shared only when the state budget was not the stopping reason.
struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint64_t>(static_cast<std::int64_t>(x))) +
           0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class WordProblemSolver {
 public:
  WordProblemSolver(Presentation p, WordBudgets budgets);

  const Presentation& presentation() const { return pres_; }
  const WordBudgets& budgets() const { return budgets_; }

  WpOutcome solve(const FreeWord& w);

 private:
  Presentation pres_;
  WordBudgets budgets_;
  std::vector<FreeWord> insertables_;  // rotations of relators and their inverses
  struct Cached {
    WpResult result;
    std::vector<FreeWord> derivation;
  };
  std::unordered_map<FreeWord, Cached, FreeWordHash> memo_;
};

}  // namespace torsor

#endif  // TORSOR_FREE_WORDS_HPP
