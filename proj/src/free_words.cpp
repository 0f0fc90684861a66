#include "torsor/free_words.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw ParseError("word letter must be nonzero");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

FreeWord invert_word(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Presentation Presentation::make(std::vector<std::string> generators,
                                std::vector<FreeWord> relators) {
  if (generators.empty()) throw ParseError("presentation needs at least one generator");
  const int n = static_cast<int>(generators.size());
  for (FreeWord& r : relators) {
    for (int letter : r)
      if (letter == 0 || std::abs(letter) > n)
        throw ParseError("relator letter out of generator range");
    r = free_reduce(r);
    if (r.empty()) throw ParseError("relator is freely trivial");
  }
  return Presentation{std::move(generators), std::move(relators)};
}

WordProblemSolver::WordProblemSolver(Presentation p, WordBudgets budgets)
    : pres_(std::move(p)), budgets_(budgets) {
  if (budgets_.max_len < 0 || budgets_.max_states < 0)
    throw ParseError("budgets must be nonnegative");
  for (const FreeWord& r : pres_.relators) {
    for (const FreeWord& base : {r, invert_word(r)}) {
      for (std::size_t rot = 0; rot < base.size(); ++rot) {
        FreeWord rotated(base.begin() + static_cast<std::ptrdiff_t>(rot), base.end());
        rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(rot));
        if (std::find(insertables_.begin(), insertables_.end(), rotated) == insertables_.end())
          insertables_.push_back(std::move(rotated));
      }
    }
  }
}

WpOutcome WordProblemSolver::solve(const FreeWord& w) {
  FreeWord start = free_reduce(w);
  if (start.empty()) return WpOutcome{WpResult::Yes, {start}};
  if (static_cast<int>(start.size()) > budgets_.max_len) return WpOutcome{WpResult::Unknown, {}};
  if (auto it = memo_.find(start); it != memo_.end())
    return WpOutcome{it->second.result, it->second.derivation};

  std::unordered_map<FreeWord, FreeWord, FreeWordHash> parent;
  parent.emplace(start, FreeWord{});
  std::deque<FreeWord> queue{start};
  long long states = 1;
  bool budget_hit = false;
  bool found = false;

  while (!queue.empty() && !found) {
    FreeWord u = queue.front();
    queue.pop_front();
    for (const FreeWord& ins : insertables_) {
      for (std::size_t pos = 0; pos <= u.size() && !found; ++pos) {
        FreeWord v;
        v.reserve(u.size() + ins.size());
        v.insert(v.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
        v.insert(v.end(), ins.begin(), ins.end());
        v.insert(v.end(), u.begin() + static_cast<std::ptrdiff_t>(pos), u.end());
        v = free_reduce(v);
        if (static_cast<int>(v.size()) > budgets_.max_len) continue;
        if (parent.contains(v)) continue;
        if (states >= budgets_.max_states) {
          budget_hit = true;
          continue;
        }
        parent.emplace(v, u);
        ++states;
        if (v.empty())
          found = true;
        else
          queue.push_back(v);
      }
      if (found) break;
    }
  }

  if (found) {
    std::vector<FreeWord> path;
    FreeWord cur;  // empty word
    for (;;) {
      path.push_back(cur);
      const FreeWord& up = parent.at(cur);
      if (cur == start) break;
      cur = up;
    }
    std::reverse(path.begin(), path.end());
    memo_.emplace(start, Cached{WpResult::Yes, path});
    return WpOutcome{WpResult::Yes, std::move(path)};
  }

  if (budget_hit) {
    memo_.emplace(start, Cached{WpResult::Unknown, {}});
    return WpOutcome{WpResult::Unknown, {}};
  }
  // The whole component within the length cap was exhausted: every explored
  // word fails the same way, so all of them can be shared.
  for (const auto& [word, par] : parent) memo_.emplace(word, Cached{WpResult::Unknown, {}});
  return WpOutcome{WpResult::Unknown, {}};
}

}  // namespace torsor
