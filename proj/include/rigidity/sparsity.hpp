#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/**
 * (2,3)-pebble game state.
 *
 * Every vertex owns two pebbles; an accepted edge is oriented away from the
 * vertex whose pebble covers it, so out-degree + pebbles = 2 everywhere. An
 * edge uv is accepted iff four pebbles can be gathered on {u, v}, which keeps
 * the accepted set (2,3)-sparse.
 */
class PebbleGame {
public:
    explicit PebbleGame(int n);

    int order() const { return static_cast<int>(pebbles_.size()); }

    /// Accepts e if independent of the accepted set; pebbles may move either way.
    bool try_add(Edge e);

    /// Drops a previously accepted edge, returning its pebble to its tail.
    void remove(Edge e);

    /// True iff e is spanned by the accepted set. The accepted set is unchanged.
    bool in_closure(Edge e);

    int rank() const { return static_cast<int>(accepted_.size()); }
    const EdgeList& accepted() const { return accepted_; }
    int pebbles(Vertex v) const { return pebbles_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    /// Accepted edges as (tail, head) pairs.
    std::vector<std::pair<Vertex, Vertex>> orientation() const;

private:
    bool gather(Vertex root, Vertex pinned);
    void reverse(Vertex tail, Vertex head);

    std::vector<int> pebbles_;
    std::vector<std::vector<Vertex>> out_;
    EdgeList accepted_;
    std::vector<int> visit_stamp_;
    std::vector<Vertex> parent_;
    int stamp_ = 0;
};

struct RankResult {
    int rank = 0;
    /// A maximum (2,3)-sparse subset, in examination order.
    EdgeList independent;
};

/// Rank of an edge set in the 2D generic rigidity matroid on n vertices.
RankResult rigidity_rank(int n, std::span<const Edge> edges);
RankResult rigidity_rank(const Graph& g);

bool is_rigid(const Graph& g);

/// A spanning (2,3)-tight edge set when G is rigid, otherwise nothing.
std::optional<EdgeList> extract_spanning_tight(const Graph& g);

/// G rigid after removing any one edge. On three or fewer vertices only K1
/// qualifies.
bool is_redundantly_rigid(const Graph& g);

/// (κ >= 3 and redundantly rigid) or complete on at most three vertices.
bool is_globally_rigid(const Graph& g);

/// Vertex sets of the rigid components; their induced edge sets partition E(G).
std::vector<VertexSet> rigid_components(const Graph& g);

}  // namespace rigidity
