#include "hopfcheck/partition.hpp"

#include "hopfcheck/types.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hopfcheck {

int SetPartition::ground_size() const {
  int total = 0;
  for (const auto& block : blocks) total += static_cast<int>(block.size());
  return total;
}

bool is_noncrossing(const SetPartition& p) {
  const int k = p.ground_size();
  std::vector<int> block_of(static_cast<std::size_t>(k) + 1, -1);
  for (int b = 0; b < p.block_count(); ++b) {
    for (int e : p.blocks[static_cast<std::size_t>(b)]) {
      block_of[static_cast<std::size_t>(e)] = b;
    }
  }
  // a < b < c < d with a,c together and b,d together in a different block.
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      if (block_of[b] == block_of[a]) continue;
      for (int c = b + 1; c <= k; ++c) {
        if (block_of[c] != block_of[a]) continue;
        for (int d = c + 1; d <= k; ++d) {
          if (block_of[d] == block_of[b]) return false;
        }
      }
    }
  }
  return true;
}

namespace {

constexpr int kMaxNoncrossingK = 14;  // Catalan growth guard

// Non-crossing partitions behave like nested parentheses: a new element may
// either open a fresh block (push) or attach to some open block, permanently
// closing every block nested inside it. Enumerating those moves yields each
// partition exactly once.
void grow(int next, int k, std::vector<std::vector<int>>& open,
          std::vector<std::vector<int>>& finished,
          std::vector<SetPartition>& out) {
  if (next > k) {
    SetPartition p;
    p.blocks = finished;
    p.blocks.insert(p.blocks.end(), open.begin(), open.end());
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    out.push_back(std::move(p));
    return;
  }
  const std::size_t depth = open.size();
  // Attach to the open block at level `lvl`, closing everything deeper.
  for (std::size_t lvl = 0; lvl < depth; ++lvl) {
    const std::size_t finished_before = finished.size();
    finished.insert(finished.end(), open.begin() + static_cast<long>(lvl) + 1,
                    open.end());
    open.resize(lvl + 1);
    open[lvl].push_back(next);
    grow(next + 1, k, open, finished, out);
    open[lvl].pop_back();
    open.insert(open.end(), finished.begin() + static_cast<long>(finished_before),
                finished.end());
    finished.resize(finished_before);
  }
  // Start a new block.
  open.push_back({next});
  grow(next + 1, k, open, finished, out);
  open.pop_back();
}

}  // namespace

std::vector<SetPartition> enumerate_noncrossing(int k) {
  if (k < 1 || k > kMaxNoncrossingK) {
    throw SizeGuardError("enumerate_noncrossing: k must lie in 1.." +
                         std::to_string(kMaxNoncrossingK) + ", got " +
                         std::to_string(k));
  }
  std::vector<SetPartition> out;
  out.reserve(static_cast<std::size_t>(catalan_number(k)));
  std::vector<std::vector<int>> open;
  std::vector<std::vector<int>> finished;
  grow(1, k, open, finished, out);
  return out;
}

long long catalan_number(int k) {
  if (k < 0 || k > 33) {
    throw SizeGuardError("catalan_number: k out of exact long long range");
  }
  std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m) {
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
  }
  return c[static_cast<std::size_t>(k)];
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

int join_block_count(const SetPartition& p, const SetPartition& q) {
  const int k = p.ground_size();
  if (q.ground_size() != k) {
    throw DimensionError("join_block_count: partitions of different sets");
  }
  UnionFind uf(k);
  for (const auto* part : {&p, &q}) {
    for (const auto& block : part->blocks) {
      for (std::size_t t = 1; t < block.size(); ++t) {
        uf.unite(block[0] - 1, block[t] - 1);
      }
    }
  }
  int count = 0;
  for (int e = 0; e < k; ++e) {
    if (uf.find(e) == e) ++count;
  }
  return count;
}

bool constant_on_blocks(const SetPartition& p, std::span<const int> tuple) {
  for (const auto& block : p.blocks) {
    const int value = tuple[static_cast<std::size_t>(block.front() - 1)];
    for (int e : block) {
      if (tuple[static_cast<std::size_t>(e - 1)] != value) return false;
    }
  }
  return true;
}

}  // namespace hopfcheck
