#include "torsor/mapping_torus.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

MappingTorus::MappingTorus(GroupPtr base, Automorphism phi)
    : base_(std::move(base)), phi_(std::move(phi)) {
  if (phi_.group().get() != base_.get())
    throw ParseError("twisting automorphism does not belong to the base group");
  Automorphism p = Automorphism::identity(base_);
  phi_powers_.push_back(p);
  p = p.then(phi_);
  while (!p.is_identity()) {
    phi_powers_.push_back(p);
    p = p.then(phi_);
  }
}

namespace {

int norm_mod(const BigInt& k, int m) {
  int r = BigInt(k % m).convert_to<int>();
  return r < 0 ? r + m : r;
}

}  // namespace

ElementId MappingTorus::phi_pow(const BigInt& k, ElementId h) const {
  return phi_powers_[static_cast<std::size_t>(norm_mod(k, phi_order()))](h);
}

const Automorphism& MappingTorus::phi_power(int k) const {
  return phi_powers_[static_cast<std::size_t>(k)];
}

TorusElement MappingTorus::mul(const TorusElement& x, const TorusElement& y) const {
  return TorusElement{base_->mul(x.h, phi_pow(x.k, y.h)), x.k + y.k};
}

TorusElement MappingTorus::inv(const TorusElement& x) const {
  return TorusElement{phi_pow(-x.k, base_->inv(x.h)), -x.k};
}

bool preserves_relation(const MappingTorus& M, const Automorphism& base_aut, ElementId twist,
                        int eps) {
  const FiniteGroup& G = M.base();
  const Automorphism& phi = M.phi();
  const Automorphism& phi_eps = eps == 1 ? phi : M.phi_power((M.phi_order() - 1) % M.phi_order());
  ElementId tw_inv = G.inv(twist);
  for (ElementId h = 0; h < G.order(); ++h) {
    ElementId lhs = base_aut(phi(h));
    ElementId rhs = G.mul(G.mul(twist, phi_eps(base_aut(h))), tw_inv);
    if (lhs != rhs) return false;
  }
  return true;
}

TorusAut::TorusAut(const MappingTorus& M, Automorphism base_aut, ElementId twist, int eps)
    : base_aut_(std::move(base_aut)), twist_(twist), eps_(eps) {
  if (eps_ != 1 && eps_ != -1) throw ParseError("orientation must be +1 or -1");
  if (twist_ < 0 || twist_ >= M.base().order()) throw ParseError("twist id out of range");
  if (!preserves_relation(M, base_aut_, twist_, eps_))
    throw Error("map does not preserve the torus relation");
}

std::optional<ElementId> alpha_twist(const MappingTorus& M, const Automorphism& delta) {
  for (ElementId g = 0; g < M.base().order(); ++g)
    if (preserves_relation(M, delta, g, 1)) return g;
  return std::nullopt;
}

TorusAut build_alpha(const MappingTorus& M, const Automorphism& delta) {
  std::optional<ElementId> g = alpha_twist(M, delta);
  if (!g) throw NotCentralizing("base automorphism does not centralize the twisting class");
  return TorusAut(M, delta, *g, 1);
}

std::optional<ElementId> zeta_twist(const MappingTorus& M, const Automorphism& delta) {
  // delta(phi(h)) = g^-1 phi^-1(delta(h)) g; equivalently the stored twist
  // g^-1 satisfies the eps = -1 relation check.
  for (ElementId g = 0; g < M.base().order(); ++g)
    if (preserves_relation(M, delta, M.base().inv(g), -1)) return g;
  return std::nullopt;
}

TorusAut build_zeta(const MappingTorus& M, const Automorphism& delta) {
  std::optional<ElementId> g = zeta_twist(M, delta);
  if (!g) throw NotReversing("base automorphism does not invert the twisting class");
  return TorusAut(M, delta, M.base().inv(*g), -1);
}

namespace {

// Reduce a group element power with an arbitrary-precision exponent.
ElementId element_pow(const FiniteGroup& G, ElementId x, const BigInt& n) {
  int ord = G.element_order(x);
  int r = norm_mod(n, ord);
  ElementId out = 0;
  for (int i = 0; i < r; ++i) out = G.mul(out, x);
  return out;
}

// (twist * t^eps)^n for n >= 0, in normal form. The base parts of the
// factor sequence repeat with period phi_order, so the whole-block product
// is an element power and only the remainder is multiplied out.
TorusElement positive_t_image_pow(const MappingTorus& M, ElementId twist, int eps,
                                  const BigInt& n) {
  const FiniteGroup& G = M.base();
  const int m = M.phi_order();
  std::vector<ElementId> partial(static_cast<std::size_t>(m) + 1);
  partial[0] = 0;
  for (int i = 0; i < m; ++i)
    partial[static_cast<std::size_t>(i) + 1] =
        G.mul(partial[static_cast<std::size_t>(i)], M.phi_pow(BigInt(i) * eps, twist));
  BigInt q = n / m;
  int r = BigInt(n % m).convert_to<int>();
  ElementId block = element_pow(G, partial[static_cast<std::size_t>(m)], q);
  return TorusElement{G.mul(block, partial[static_cast<std::size_t>(r)]), BigInt(eps) * n};
}

TorusElement t_image_pow(const MappingTorus& M, ElementId twist, int eps, const BigInt& n) {
  if (n >= 0) return positive_t_image_pow(M, twist, eps, n);
  return M.inv(positive_t_image_pow(M, twist, eps, -n));
}

}  // namespace

TorusElement apply(const MappingTorus& M, const TorusAut& a, const TorusElement& x) {
  TorusElement head{a.base_aut()(x.h), 0};
  return M.mul(head, t_image_pow(M, a.twist(), a.eps(), x.k));
}

TorusAut compose(const MappingTorus& M, const TorusAut& a, const TorusAut& b) {
  Automorphism base = a.base_aut().then(b.base_aut());
  TorusElement t_img = apply(M, b, TorusElement{a.twist(), a.eps()});
  return TorusAut(M, std::move(base), t_img.h, t_img.k.convert_to<int>());
}

TorusAut invert(const MappingTorus& M, const TorusAut& a) {
  Automorphism base = a.base_aut().inverse();
  ElementId g = a.twist();
  const FiniteGroup& G = M.base();
  ElementId tw = a.eps() == 1 ? base(G.inv(g)) : base(M.phi()(g));
  return TorusAut(M, std::move(base), tw, a.eps());
}

TorusAut torus_inner(const MappingTorus& M, ElementId k, const BigInt& i) {
  const FiniteGroup& G = M.base();
  int r = norm_mod(i, M.phi_order());
  Automorphism base = M.phi_power(r).then(inner(M.base_ptr(), G.inv(k)));
  ElementId tw = G.mul(k, M.phi()(G.inv(k)));
  return TorusAut(M, std::move(base), tw, 1);
}

bool inner_equivalent(const MappingTorus& M, const TorusAut& a, const TorusAut& b) {
  if (a.eps() != b.eps()) return false;
  for (ElementId k = 0; k < M.base().order(); ++k)
    for (int i = 0; i < M.phi_order(); ++i)
      if (compose(M, b, torus_inner(M, k, i)) == a) return true;
  return false;
}

ClassifiedAut classify(const TorusAut& a) {
  return ClassifiedAut{a.eps() == 1 ? AutKind::Alpha : AutKind::Zeta, a.base_aut()};
}

namespace {

TorusClassKey key_of(const TorusAut& a) {
  return TorusClassKey{a.eps() == 1 ? 0 : 1, a.base_aut().table(), a.twist()};
}

// Lex-least parametrization in the inner-equivalence class of a.
std::pair<TorusClassKey, TorusAut> canonical_class_rep(const MappingTorus& M,
                                                  const std::vector<TorusAut>& inners,
                                                  const TorusAut& a) {
  TorusAut best = a;
  TorusClassKey best_key = key_of(a);
  for (const TorusAut& inn : inners) {
    TorusAut c = compose(M, a, inn);
    TorusClassKey k = key_of(c);
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(c);
    }
  }
  return {best_key, best};
}

}  // namespace

DirectOut::DirectOut(const MappingTorus& M, long long enumeration_cap)
    : index_(1), out_(AbstractGroup::trivial()), out0_(AbstractGroup::trivial()) {
  const FiniteGroup& G = M.base();
  std::vector<Automorphism> auts = compute_aut(M.base_ptr());
  if (static_cast<long long>(G.order()) * static_cast<long long>(auts.size()) > enumeration_cap)
    throw CapExceeded("direct enumeration: |H| * |Aut(H)| exceeds cap");

  inners_.reserve(static_cast<std::size_t>(G.order()) * static_cast<std::size_t>(M.phi_order()));
  for (ElementId k = 0; k < G.order(); ++k)
    for (int i = 0; i < M.phi_order(); ++i) inners_.push_back(torus_inner(M, k, i));
  const std::vector<TorusAut>& inners = inners_;

  std::map<TorusClassKey, TorusAut> classes;
  for (const Automorphism& delta : auts)
    for (int eps : {1, -1})
      for (ElementId g = 0; g < G.order(); ++g) {
        if (!preserves_relation(M, delta, g, eps)) continue;
        TorusAut cand(M, delta, g, eps);
        auto [key, rep] = canonical_class_rep(M, inners, cand);
        classes.try_emplace(std::move(key), std::move(rep));
      }

  // Identity class first, remaining classes in canonical key order. The
  // identity parametrization is its own class minimum, so this is a no-op
  // reorder whenever the key order already starts at the identity.
  TorusAut identity_aut(M, Automorphism::identity(M.base_ptr()), 0, 1);
  TorusClassKey identity_key = canonical_class_rep(M, inners, identity_aut).first;
  std::map<TorusClassKey, int> indexed;
  reps_.clear();
  reps_.push_back(classes.at(identity_key));
  indexed.emplace(identity_key, 0);
  for (const auto& [key, rep] : classes) {
    if (key == identity_key) continue;
    indexed.emplace(key, static_cast<int>(reps_.size()));
    reps_.push_back(rep);
  }

  const int n = static_cast<int>(reps_.size());
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TorusAut prod = compose(M, reps_[static_cast<std::size_t>(i)], reps_[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          indexed.at(canonical_class_rep(M, inners, prod).first);
    }
  out_ = AbstractGroup(n, std::move(table));
  class_index_ = std::move(indexed);

  for (int i = 0; i < n; ++i)
    if (reps_[static_cast<std::size_t>(i)].eps() == 1) out0_ids_.push_back(i);
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < out0_ids_.size(); ++i)
    pos[static_cast<std::size_t>(out0_ids_[i])] = static_cast<int>(i);
  const int n0 = static_cast<int>(out0_ids_.size());
  std::vector<int> table0(static_cast<std::size_t>(n0) * static_cast<std::size_t>(n0));
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) {
      int prod = out_.mul(out0_ids_[static_cast<std::size_t>(i)], out0_ids_[static_cast<std::size_t>(j)]);
      if (pos[static_cast<std::size_t>(prod)] < 0)
        throw CrossValidationError("orientation-preserving classes are not closed");
      table0[static_cast<std::size_t>(i) * static_cast<std::size_t>(n0) + static_cast<std::size_t>(j)] =
          pos[static_cast<std::size_t>(prod)];
    }
  out0_ = AbstractGroup(n0, std::move(table0));

  if (out_.order() % out0_.order() != 0)
    throw CrossValidationError("orientation subgroup order does not divide the full order");
  index_ = out_.order() / out0_.order();
  if (index_ != 1 && index_ != 2)
    throw CrossValidationError("orientation subgroup index is neither 1 nor 2");
}

int DirectOut::class_of(const MappingTorus& M, const TorusAut& a) const {
  auto it = class_index_.find(canonical_class_rep(M, inners_, a).first);
  if (it == class_index_.end())
    throw CrossValidationError("torus automorphism not found among enumerated classes");
  return it->second;
}

DirectOut enumerate_out_direct(const MappingTorus& M, long long enumeration_cap) {
  return DirectOut(M, enumeration_cap);
}

}  // namespace torsor
