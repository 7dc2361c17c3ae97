#pragma once

#include "hopfcheck/types.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace hopfcheck {

/// Permutation of {1..n}, stored as the image sequence (1-indexed).
class Permutation {
 public:
  /// Validates that images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }

  /// Image of a point, 1-indexed.
  int apply(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }

  /// Composition: (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& other) const;

  Permutation inverse() const;

  int fixed_point_count() const;

  const std::vector<int>& images() const { return images_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Closure of the generated group under composition (breadth-first over
/// products), returned sorted. Throws SizeGuardError when the group grows past
/// size_guard elements and DimensionError on mixed degrees.
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::size_t size_guard = 1000000);

}  // namespace hopfcheck
