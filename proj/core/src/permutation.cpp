#include "hopfcheck/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace hopfcheck {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) {
    throw InvalidInputError("permutation must act on at least one point");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidInputError("image sequence is not a bijection of {1.." +
                              std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) {
    throw DimensionError("cannot compose permutations of degrees " +
                         std::to_string(size()) + " and " +
                         std::to_string(other.size()));
  }
  std::vector<int> images(images_.size());
  for (int x = 1; x <= size(); ++x) {
    images[static_cast<std::size_t>(x - 1)] = apply(other.apply(x));
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 1; x <= size(); ++x) {
    images[static_cast<std::size_t>(apply(x) - 1)] = x;
  }
  return Permutation(std::move(images));
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int x = 1; x <= size(); ++x) {
    if (apply(x) == x) ++count;
  }
  return count;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::size_t size_guard) {
  if (generators.empty()) {
    throw InvalidInputError("generate_group: need at least one generator");
  }
  const int n = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw DimensionError("generate_group: generators act on different point sets");
    }
  }

  std::set<Permutation> elements;
  std::vector<Permutation> frontier;
  elements.insert(Permutation::identity(n));
  frontier.push_back(Permutation::identity(n));

  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        Permutation product = g * e;
        if (elements.insert(product).second) {
          if (elements.size() > size_guard) {
            throw SizeGuardError("generate_group: group exceeds size guard of " +
                                 std::to_string(size_guard) + " elements");
          }
          next.push_back(std::move(product));
        }
      }
    }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

}  // namespace hopfcheck
