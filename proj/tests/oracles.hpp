#ifndef TORSOR_TESTS_ORACLES_HPP
#define TORSOR_TESTS_ORACLES_HPP

// Independent oracles for the test suites. Everything here recomputes from
// first principles (raw image tables, exhaustive enumeration) and must stay
// independent of the library code paths it checks.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace torsor::oracles {

using Images = std::vector<int>;

inline Images compose_images(const Images& a, const Images& b) {
  Images out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

inline Images identity_images(int degree) {
  Images out(static_cast<std::size_t>(degree));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Set-based closure over raw image tables; counts the subgroup generated.
inline std::set<Images> brute_force_closure(const std::vector<Images>& gens) {
  std::set<Images> elems{identity_images(static_cast<int>(gens[0].size()))};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Images> next = elems;
    for (const Images& e : elems)
      for (const Images& g : gens) {
        Images p = compose_images(e, g);
        if (next.insert(p).second) grew = true;
      }
    elems.swap(next);
  }
  return elems;
}

// All multiplication-preserving bijections of a multiplication table, by
// exhausting every permutation of the non-identity elements.
template <typename MulFn>
std::vector<std::vector<int>> brute_force_automorphisms(int order, MulFn&& mul) {
  std::vector<int> tail(static_cast<std::size_t>(order > 0 ? order - 1 : 0));
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<std::vector<int>> found;
  std::vector<int> table(static_cast<std::size_t>(order));
  do {
    table[0] = 0;
    for (int i = 1; i < order; ++i) table[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i - 1)];
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      for (int b = 0; b < order; ++b)
        if (table[static_cast<std::size_t>(mul(a, b))] !=
            mul(table[static_cast<std::size_t>(a)], table[static_cast<std::size_t>(b)])) {
          ok = false;
          break;
        }
    if (ok) found.push_back(table);
  } while (std::next_permutation(tail.begin(), tail.end()));
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace torsor::oracles

#endif  // TORSOR_TESTS_ORACLES_HPP
