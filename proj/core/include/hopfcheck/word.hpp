#pragma once

#include <utility>
#include <vector>

namespace hopfcheck {

/// Monomial index word: letters (i_t, j_t), 1-indexed, length >= 1. The word
/// (i_1,j_1)...(i_k,j_k) stands for the coefficient u_{i_1 j_1}...u_{i_k j_k}.
struct Word {
  std::vector<std::pair<int, int>> letters;

  int length() const { return static_cast<int>(letters.size()); }

  bool operator==(const Word&) const = default;
};

}  // namespace hopfcheck
