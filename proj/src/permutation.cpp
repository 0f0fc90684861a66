#include "torsor/permutation.hpp"

#include <string>
#include <utility>

#include "torsor/errors.hpp"

namespace torsor {

Permutation::Permutation(int degree) {
  if (degree <= 0) throw ParseError("permutation degree must be positive");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw ParseError("permutation degree must be positive");
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int img : images_) {
    if (img < 0 || img >= n || seen[static_cast<std::size_t>(img)])
      throw ParseError("images do not form a bijection on 0.." + std::to_string(n - 1));
    seen[static_cast<std::size_t>(img)] = true;
  }
}

Permutation Permutation::then(const Permutation& next) const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = next.images_[static_cast<std::size_t>(images_[i])];
  Permutation p(1);
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p(1);
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace torsor
