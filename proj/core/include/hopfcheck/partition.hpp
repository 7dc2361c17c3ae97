#pragma once

#include <span>
#include <vector>

namespace hopfcheck {

/// Partition of {1..k} into disjoint nonempty blocks. Canonical form: each
/// block sorted ascending, blocks ordered by smallest element.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  int ground_size() const;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// No a < b < c < d with {a,c} and {b,d} in distinct blocks.
bool is_noncrossing(const SetPartition& p);

/// All non-crossing partitions of {1..k} in a fixed deterministic order;
/// the count is the k-th Catalan number. Guarded at k <= 14.
std::vector<SetPartition> enumerate_noncrossing(int k);

/// Catalan number by the convolution recurrence (exact in long long for the
/// guarded range).
long long catalan_number(int k);

/// Number of blocks of the join p v q in the full partition lattice
/// (union-find over co-blocks).
int join_block_count(const SetPartition& p, const SetPartition& q);

/// True iff the tuple (1-indexed values, tuple[t] belongs to position t+1) is
/// constant on every block of p.
bool constant_on_blocks(const SetPartition& p, std::span<const int> tuple);

}  // namespace hopfcheck
