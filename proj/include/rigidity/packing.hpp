#pragma once

#include <optional>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

struct PackingResult {
    int k = 0;
    bool found = false;
    /// Rank of E(G) in the k-fold union of the rigidity matroid.
    int union_rank = 0;
    /// When found: k pairwise disjoint spanning Laman edge sets.
    std::vector<EdgeList> parts;

    friend bool operator==(const PackingResult&, const PackingResult&) = default;
};

/**
 * k edge-disjoint spanning rigid subgraphs via matroid union.
 *
 * Edges are offered in graph order; each is inserted along a shortest
 * augmenting path of the exchange graph (BFS, sets and elements scanned in
 * increasing index), with independence decided by the pebble game.
 * Requires n >= 3 and k >= 1.
 */
PackingResult pack_spanning_rigid(const Graph& g, int k);

/// Same packing; every part is additionally checked to be 2-connected.
PackingResult pack_spanning_2connected(const Graph& g, int k);

/// Largest order accepted by partition_condition_oracle.
inline constexpr int kPartitionOracleMaxOrder = 9;

struct PartitionViolation {
    VertexSet z;
    Partition partition;
    long long lhs = 0;  // e_{G-Z}(π)
    long long rhs = 0;  // k(3-|Z|)n0' + 2k n0 - 3k - n_Z(π)
};

struct PartitionConditionResult {
    bool holds = true;
    std::optional<PartitionViolation> violation;
    long long instances_checked = 0;
};

/**
 * Exhaustive check of e_{G-Z}(π) >= k(3-|Z|)n0' + 2k n0 - 3k - n_Z(π) over all
 * proper Z ⊂ V(G) and all partitions π of V(G-Z). Z is scanned by size then
 * lexicographically, partitions finest-first; the first violation is
 * reported. Throws SizeGuardError above kPartitionOracleMaxOrder vertices.
 */
PartitionConditionResult partition_condition_oracle(const Graph& g, int k);

}  // namespace rigidity
