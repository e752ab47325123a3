#pragma once

#include <optional>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// Collection of vertex sets whose induced edge sets should partition E(G).
struct Cover {
    std::vector<VertexSet> blocks;

    /// Σ (2|X| - 3) over the blocks.
    long long value() const;

    friend bool operator==(const Cover&, const Cover&) = default;
};

struct CoverCheck {
    long long value = 0;
    long long threshold = 0;  // 2n - 3
    bool is_nonrigidity_witness = false;
};

/// Checks the cover is well formed and compares its value with 2n - 3.
/// Throws InputError on a block with fewer than two vertices or out-of-range
/// vertices, and on an edge covered twice or not at all (naming that edge).
CoverCheck verify_cover(const Graph& g, const Cover& cover);

/// Largest order accepted by search_witness_cover.
inline constexpr int kCoverSearchMaxOrder = 10;

/**
 * Exhaustive search for a cover of value below 2n - 3.
 *
 * Blocks range over vertex sets inducing a connected subgraph; a cover of
 * disconnected blocks can always be split into a cheaper one. Covers are
 * tried with fewest blocks first and the first witness found is returned.
 * Returns nothing iff G is rigid. Throws SizeGuardError above
 * kCoverSearchMaxOrder vertices.
 */
std::optional<Cover> search_witness_cover(const Graph& g);

/// The 15-block cover of H_d: the five copies, then the ten connector edges. d >= 6.
Cover hd_canonical_cover(int d);

/// Cover by rigid components; a witness whenever G is not rigid.
Cover rigid_component_cover(const Graph& g);

}  // namespace rigidity
