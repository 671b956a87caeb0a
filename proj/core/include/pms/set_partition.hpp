#pragma once

#include <functional>
#include <vector>

#include "pms/partition.hpp"

namespace pms {

/// Set partition of {1,…,N}. Blocks are stored sorted internally and ordered
/// by their minimum element; this is the canonical form used everywhere.
struct SetPartition {
    int ground_size = 0;
    std::vector<std::vector<int>> blocks;

    Partition shape() const;
    /// block id of each point, 1-based lookup (index 0 unused).
    std::vector<int> block_of() const;
};

/// Number of set partitions of {1,…,N} of the given shape:
/// N! / ∏ (s_i)!^{m_i} · m_i!  over distinct part sizes s_i with multiplicity m_i.
BigInt set_partition_count(int N, const Partition& shape);

/// Number of set partitions of shape 2λ refined by one fixed perfect matching:
/// n! / ∏ i!^{m_i} · m_i!  over the parts of λ ⊢ n.
BigInt refinement_count(const Partition& lambda);

/// Emits every set partition of {1,…,N} of the given shape exactly once, in a
/// fixed deterministic order (the block of the smallest unplaced element is
/// chosen first; candidate block sizes decreasing; members lexicographic).
/// The callback may return false to stop early.
void for_each_set_partition_of_shape(int N, const Partition& shape,
                                     const std::function<bool(const SetPartition&)>& fn);

/// Materialised variant of the above, in the same order.
std::vector<SetPartition> set_partitions_of_shape(int N, const Partition& shape);

}  // namespace pms
