#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace filled {

/// A permutation of {1..degree}, stored as 0-based images.
class Permutation {
 public:
  Permutation() = default;

  /// Identity permutation.
  explicit Permutation(int degree);

  /// From a 0-based image vector; validates that it is a bijection.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return int(images_.size()); }

  /// Image of a 0-based point.
  int apply(int point) const { return images_[std::size_t(point)]; }

  Permutation inverse() const;

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

  /// Disjoint-cycle notation on 1-based points, e.g. "(1 2 3)(4 5)".
  /// The identity renders as "()".
  std::string to_cycles() const;

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

/// Composition: apply `first`, then `then`. Degrees must match.
Permutation compose(const Permutation& first, const Permutation& then);

/// Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)". Points are 1-based
/// and must lie in [1, degree]; points not named are fixed. "()" is the
/// identity. Whitespace and commas both separate points. Throws
/// validation_error (with the byte position) on repeated points, points out
/// of range, or malformed parentheses.
Permutation parse_permutation_cycles(std::string_view text, int degree);

}  // namespace filled
