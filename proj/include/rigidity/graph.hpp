#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidity {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;
using VertexSet = std::vector<Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Immutable after construction. Neighbor lists are kept sorted; edges() keeps
 * the order in which distinct edges were first supplied, which is the order
 * the pebble game examines them.
 */
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Duplicate edges collapse; loops and out-of-range endpoints throw InputError.
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adjacency_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    const EdgeList& edges() const { return edges_; }

    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return min_degree() == max_degree(); }
    bool is_complete() const;

    /// Copy with one more edge (no-op if already present).
    Graph with_edge(Edge e) const;
    /// Copy without the given edge; throws InputError if absent.
    Graph without_edge(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    EdgeList edges_;
};

/**
 * Partition of a vertex subset (the ground set) into nonempty disjoint parts.
 * Parts and the ground set are kept sorted; part order is preserved.
 */
class Partition {
public:
    /// Throws InputError on empty parts, repeated vertices, or negative labels.
    explicit Partition(std::vector<VertexSet> parts);

    /// Builds the partition of `ground` whose part of ground[i] is labels[i].
    static Partition from_labels(std::span<const Vertex> ground, std::span<const int> labels);

    const VertexSet& ground() const { return ground_; }
    const std::vector<VertexSet>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    /// Vertices u_1..u_{n0} forming singleton parts.
    VertexSet trivial_parts() const;
    int trivial_count() const;
    int nontrivial_count() const { return part_count() - trivial_count(); }

private:
    VertexSet ground_;
    std::vector<VertexSet> parts_;
};

/// G - Z with contiguous relabeling; original[i] is the old label of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

/// Edge-list document: "n m" header, then m lines "u v"; '#' lines are comments.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_edge_list(const Graph& g);

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept);

/// |∂(U)|: edges with exactly one end in U. Requires ∅ ≠ U ⊊ V(G).
int boundary(const Graph& g, std::span<const Vertex> subset);

/// e(X, Y) for disjoint nonempty X, Y.
int cross_edges(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

/// e_G(π) for a partition π of V(G).
int partition_cross_count(const Graph& g, const Partition& partition);

/// n_Z(π): over the singleton parts {u} of π, sum |N(u) ∩ Z|. π must partition V(G) \ Z.
int n_z_of_partition(const Graph& g, std::span<const Vertex> z, const Partition& partition);

int min_degree(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths, capped at `limit`.
/// s and t must be distinct and non-adjacent.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

/// κ(G); κ(K_n) = n - 1. Requires n >= 2.
int vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

}  // namespace rigidity
