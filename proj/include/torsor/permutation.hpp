#ifndef TORSOR_PERMUTATION_HPP
#define TORSOR_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace torsor {

/// A permutation of {0, ..., degree-1}, stored as its image table.
///
/// Composition is left-to-right throughout the toolkit: a.then(b) maps a
/// point x to b[a[x]], i.e. apply a first.
class Permutation {
 public:
  explicit Permutation(int degree);              // identity
  explicit Permutation(std::vector<int> images); // throws ParseError if not a bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace torsor

#endif  // TORSOR_PERMUTATION_HPP
