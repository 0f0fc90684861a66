#include "torsor/abstract_group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

AbstractGroup::AbstractGroup(int order, std::vector<int> mul_table)
    : order_(order), mul_(std::move(mul_table)) {
  if (order_ <= 0) throw ParseError("group order must be positive");
  const std::size_t n = static_cast<std::size_t>(order_);
  if (mul_.size() != n * n) throw ParseError("multiplication table has wrong size");
  for (int v : mul_)
    if (v < 0 || v >= order_) throw ParseError("multiplication table entry out of range");
  for (int a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw ParseError("index 0 is not an identity for the table");
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < order_; ++b) {
      if (row[static_cast<std::size_t>(mul(a, b))])
        throw ParseError("multiplication table row is not a bijection");
      row[static_cast<std::size_t>(mul(a, b))] = true;
      if (col[static_cast<std::size_t>(mul(b, a))])
        throw ParseError("multiplication table column is not a bijection");
      col[static_cast<std::size_t>(mul(b, a))] = true;
    }
  }
  inv_.assign(n, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inv_[static_cast<std::size_t>(a)] < 0)
      throw ParseError("element has no two-sided inverse");
  }
}

bool AbstractGroup::abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int AbstractGroup::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::map<int, int> AbstractGroup::order_histogram() const {
  std::map<int, int> hist;
  for (int a = 0; a < order_; ++a) ++hist[element_order(a)];
  return hist;
}

AbstractGroup AbstractGroup::trivial() { return AbstractGroup(1, {0}); }

AbstractGroup AbstractGroup::cyclic(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b)] = (a + b) % n;
  return AbstractGroup(n, std::move(table));
}

AbstractGroup AbstractGroup::from_finite_group(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b)] = G.mul(a, b);
  return AbstractGroup(n, std::move(table));
}

namespace {

AbstractGroup dihedral_reference(int k) {
  // Rotation + reflection acting on k >= 3 points.
  std::vector<int> rot(static_cast<std::size_t>(k));
  std::vector<int> ref(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % k;
    ref[static_cast<std::size_t>(i)] = (k - i) % k;
  }
  FiniteGroup G = FiniteGroup::close("D", k, {Permutation(rot), Permutation(ref)});
  return AbstractGroup::from_finite_group(G);
}

AbstractGroup symmetric_reference(int k) {
  if (k == 1) return AbstractGroup::trivial();
  std::vector<int> cyc(static_cast<std::size_t>(k));
  std::vector<int> swp(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    cyc[static_cast<std::size_t>(i)] = (i + 1) % k;
    swp[static_cast<std::size_t>(i)] = i;
  }
  std::swap(swp[0], swp[1]);
  FiniteGroup G = FiniteGroup::close("S", k, {Permutation(cyc), Permutation(swp)});
  return AbstractGroup::from_finite_group(G);
}

}  // namespace

std::string AbstractGroup::identify() const {
  const int n = order_;
  if (n == 1) return "C1";
  // Cyclic: some element has full order.
  for (int a = 1; a < n; ++a)
    if (element_order(a) == n) return "C" + std::to_string(n);
  static const int factorial[] = {1, 1, 2, 6, 24, 120};
  for (int k = 3; k <= 5; ++k)
    if (n == factorial[k] && iso_test(*this, symmetric_reference(k))) return "S" + std::to_string(k);
  if (n % 2 == 0 && n >= 6 && iso_test(*this, dihedral_reference(n / 2)))
    return "D" + std::to_string(n / 2);
  return "G" + std::to_string(n);
}

Subgroup out_centralizer(const AbstractGroup& G, int a) {
  std::vector<int> members;
  for (int c = 0; c < G.order(); ++c)
    if (G.mul(c, a) == G.mul(a, c)) members.push_back(c);
  std::vector<int> pos(static_cast<std::size_t>(G.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  const int m = static_cast<int>(members.size());
  std::vector<int> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = G.mul(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          pos[static_cast<std::size_t>(prod)];
    }
  return Subgroup{AbstractGroup(m, std::move(table)), std::move(members)};
}

Subgroup cyclic_closure(const AbstractGroup& G, int a) {
  std::vector<int> members{0};
  int x = a;
  while (x != 0) {
    members.push_back(x);
    x = G.mul(x, a);
  }
  std::sort(members.begin(), members.end());
  std::vector<int> pos(static_cast<std::size_t>(G.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  const int m = static_cast<int>(members.size());
  std::vector<int> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          pos[static_cast<std::size_t>(
              G.mul(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]))];
  return Subgroup{AbstractGroup(m, std::move(table)), std::move(members)};
}

QuotientResult quotient(const AbstractGroup& C, const std::vector<int>& normal_elements) {
  std::vector<bool> in_n(static_cast<std::size_t>(C.order()), false);
  for (int x : normal_elements) {
    if (x < 0 || x >= C.order()) throw ParseError("subgroup element out of range");
    in_n[static_cast<std::size_t>(x)] = true;
  }
  if (!in_n[0]) throw ParseError("subgroup must contain the identity");
  for (int x : normal_elements) {
    if (!in_n[static_cast<std::size_t>(C.inv(x))]) throw ParseError("set not closed under inverse");
    for (int y : normal_elements)
      if (!in_n[static_cast<std::size_t>(C.mul(x, y))])
        throw ParseError("set not closed under multiplication");
    for (int c = 0; c < C.order(); ++c)
      if (C.mul(x, c) != C.mul(c, x))
        throw ParseError("subgroup is not central in the ambient group");
  }

  // Label each coset xN by its least member; order cosets by that label.
  std::vector<int> least(static_cast<std::size_t>(C.order()), -1);
  std::vector<int> coset_leaders;
  for (int x = 0; x < C.order(); ++x) {
    if (least[static_cast<std::size_t>(x)] >= 0) continue;
    int lead = x;  // first unseen element of the coset is its least member
    for (int nels : normal_elements) {
      int y = C.mul(x, nels);
      least[static_cast<std::size_t>(y)] = lead;
    }
    coset_leaders.push_back(lead);
  }
  std::vector<int> index_of(static_cast<std::size_t>(C.order()), -1);
  for (std::size_t i = 0; i < coset_leaders.size(); ++i)
    index_of[static_cast<std::size_t>(coset_leaders[i])] = static_cast<int>(i);

  std::vector<int> coset_of(static_cast<std::size_t>(C.order()));
  for (int x = 0; x < C.order(); ++x)
    coset_of[static_cast<std::size_t>(x)] = index_of[static_cast<std::size_t>(least[static_cast<std::size_t>(x)])];

  const int q = static_cast<int>(coset_leaders.size());
  std::vector<int> table(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(q) + static_cast<std::size_t>(j)] =
          coset_of[static_cast<std::size_t>(
              C.mul(coset_leaders[static_cast<std::size_t>(i)], coset_leaders[static_cast<std::size_t>(j)]))];
  return QuotientResult{AbstractGroup(q, std::move(table)), std::move(coset_of)};
}

namespace {

// Greedy generating sequence: repeatedly adjoin the least element outside
// the subgroup generated so far.
std::vector<int> generating_sequence(const AbstractGroup& G) {
  std::vector<bool> in_sub(static_cast<std::size_t>(G.order()), false);
  in_sub[0] = true;
  int known = 1;
  std::vector<int> gens;
  auto closure_add = [&](int g) {
    std::vector<int> frontier{g};
    if (!in_sub[static_cast<std::size_t>(g)]) {
      in_sub[static_cast<std::size_t>(g)] = true;
      ++known;
    }
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int y = 0; y < G.order(); ++y) {
        if (!in_sub[static_cast<std::size_t>(y)]) continue;
        for (int prod : {G.mul(x, y), G.mul(y, x)}) {
          if (!in_sub[static_cast<std::size_t>(prod)]) {
            in_sub[static_cast<std::size_t>(prod)] = true;
            ++known;
            frontier.push_back(prod);
          }
        }
      }
    }
  };
  for (int x = 1; x < G.order() && known < G.order(); ++x) {
    if (in_sub[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    closure_add(x);
  }
  return gens;
}

// Extend generator images to a full map by product closure; false on conflict.
bool extend_map(const AbstractGroup& A, const AbstractGroup& B, const std::vector<int>& gens,
                const std::vector<int>& images, std::vector<int>& map) {
  map.assign(static_cast<std::size_t>(A.order()), -1);
  std::vector<bool> used(static_cast<std::size_t>(B.order()), false);
  map[0] = 0;
  used[0] = true;
  std::vector<int> known{0};
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    int g = gens[gi];
    if (map[static_cast<std::size_t>(g)] < 0) {
      int img = images[gi];
      if (used[static_cast<std::size_t>(img)]) return false;
      map[static_cast<std::size_t>(g)] = img;
      used[static_cast<std::size_t>(img)] = true;
      known.push_back(g);
    } else if (map[static_cast<std::size_t>(g)] != images[gi]) {
      return false;
    }
    // Close under products of known elements.
    for (std::size_t i = 0; i < known.size(); ++i) {
      for (std::size_t j = 0; j < known.size(); ++j) {
        int a = known[i], b = known[j];
        int prod = A.mul(a, b);
        int img = B.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
        if (map[static_cast<std::size_t>(prod)] < 0) {
          if (used[static_cast<std::size_t>(img)]) return false;
          map[static_cast<std::size_t>(prod)] = img;
          used[static_cast<std::size_t>(img)] = true;
          known.push_back(prod);
        } else if (map[static_cast<std::size_t>(prod)] != img) {
          return false;
        }
      }
    }
  }
  for (int v : map)
    if (v < 0) return false;  // gens did not generate A (cannot happen)
  return true;
}

bool full_hom_check(const AbstractGroup& A, const AbstractGroup& B, const std::vector<int>& map) {
  for (int a = 0; a < A.order(); ++a)
    for (int b = 0; b < A.order(); ++b)
      if (map[static_cast<std::size_t>(A.mul(a, b))] !=
          B.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> iso_test(const AbstractGroup& A, const AbstractGroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (A.abelian() != B.abelian()) return std::nullopt;
  if (A.order_histogram() != B.order_histogram()) return std::nullopt;
  if (A.order() == 1) return std::vector<int>{0};

  std::vector<int> gens = generating_sequence(A);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = A.element_order(gens[i]);
    for (int y = 0; y < B.order(); ++y)
      if (B.element_order(y) == ord) candidates[i].push_back(y);
  }

  std::vector<int> images(gens.size());
  std::vector<int> map;
  std::optional<std::vector<int>> witness;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (extend_map(A, B, gens, images, map) && full_hom_check(A, B, map)) {
        witness = map;
        return true;
      }
      return false;
    }
    for (int c : candidates[depth]) {
      images[depth] = c;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return witness;
}

std::optional<int> out_conjugacy_test(const AbstractGroup& G, int a, int b) {
  for (int c = 0; c < G.order(); ++c)
    if (G.mul(G.mul(G.inv(c), a), c) == b) return c;
  return std::nullopt;
}

namespace {

// Lex-least table in the inner coset of the given automorphism table.
std::vector<ElementId> canonical_coset_table(const FiniteGroup& G,
                                             const std::vector<ElementId>& table) {
  std::vector<ElementId> best = table;
  std::vector<ElementId> t(table.size());
  for (ElementId g = 0; g < G.order(); ++g) {
    for (ElementId h = 0; h < G.order(); ++h)
      t[static_cast<std::size_t>(h)] = G.conjugate(table[static_cast<std::size_t>(h)], g);
    if (t < best) best = t;
  }
  return best;
}

}  // namespace

OuterQuotient::OuterQuotient(GroupPtr group, const std::vector<Automorphism>& auts)
    : base_(std::move(group)),
      inn_order_(0),
      group_(AbstractGroup::trivial()) {
  const FiniteGroup& G = *base_;
  std::map<std::vector<ElementId>, int> seen;
  for (const Automorphism& a : auts) {
    std::vector<ElementId> canon = canonical_coset_table(G, a.table());
    if (!seen.contains(canon)) seen.emplace(std::move(canon), 0);
  }
  int idx = 0;
  for (auto& [table, i] : seen) {
    i = idx++;
    reps_.emplace_back(base_, table);
  }
  index_ = std::move(seen);
  inn_order_ = G.order() / static_cast<int>(G.center().size());

  const int m = static_cast<int>(reps_.size());
  std::vector<int> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Automorphism prod = reps_[static_cast<std::size_t>(i)].then(reps_[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)] =
          index_.at(canonical_coset_table(G, prod.table()));
    }
  group_ = AbstractGroup(m, std::move(table));
}

Automorphism OuterQuotient::canonical_rep(const Automorphism& a) const {
  return Automorphism(base_, canonical_coset_table(*base_, a.table()));
}

int OuterQuotient::class_of(const Automorphism& a) const {
  auto it = index_.find(canonical_rep(a).table());
  if (it == index_.end()) throw ParseError("automorphism not in the projected set");
  return it->second;
}

OuterQuotient project_out(const GroupPtr& group, const std::vector<Automorphism>& auts) {
  return OuterQuotient(group, auts);
}

}  // namespace torsor
