#pragma once
// Brute-force reference implementations. Exponential and slow; they share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rigidity/graph.hpp"

namespace oracle {

using rigidity::Edge;
using rigidity::EdgeList;
using rigidity::Graph;
using rigidity::Vertex;

/// Every vertex subset X with |X| >= 2 spans at most 2|X|-3 of `edges`.
inline bool is_23_sparse(int n, const EdgeList& edges) {
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        const int size = std::popcount(set);
        if (size < 2) {
            continue;
        }
        int inside = 0;
        for (const Edge& e : edges) {
            inside += (set >> e.u & 1u) && (set >> e.v & 1u);
        }
        if (inside > 2 * size - 3) {
            return false;
        }
    }
    return true;
}

/// Matroid rank by greedy insertion with the exhaustive sparsity test.
inline int sparsity_rank(int n, const EdgeList& edges) {
    EdgeList kept;
    for (const Edge& e : edges) {
        kept.push_back(e);
        if (!is_23_sparse(n, kept)) {
            kept.pop_back();
        }
    }
    return static_cast<int>(kept.size());
}

inline bool is_connected_without(const Graph& g, std::uint32_t removed) {
    const int n = g.order();
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (!(removed >> v & 1u)) {
            ++alive;
            if (start < 0) start = v;
        }
    }
    if (alive <= 1) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w] && !(removed >> w & 1u)) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == alive;
}

/// Smallest vertex set whose removal disconnects G; n-1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    int best = n - 1;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        const int size = std::popcount(set);
        if (size < best && size <= n - 2 && !is_connected_without(g, set)) {
            best = size;
        }
    }
    return best;
}

/// Cyclic Jacobi eigenvalue iteration on a dense copy; ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                off += a[i][j] * a[i][j];
            }
        }
        if (off < 1e-26) {
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
        values[i] = a[i][i];
    }
    std::sort(values.begin(), values.end());
    return values;
}

inline std::vector<std::vector<double>> dense_laplacian(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (const Edge& e : g.edges()) {
        l[e.u][e.v] -= 1.0;
        l[e.v][e.u] -= 1.0;
        l[e.u][e.u] += 1.0;
        l[e.v][e.v] += 1.0;
    }
    return l;
}

/// All connected graphs on n vertices, one per isomorphism class (n <= 6).
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            slots.emplace_back(u, v);
        }
    }
    const int s = static_cast<int>(slots.size());
    std::vector<int> slot_index(n * n, -1);
    for (int i = 0; i < s; ++i) {
        slot_index[slots[i].first * n + slots[i].second] = i;
        slot_index[slots[i].second * n + slots[i].first] = i;
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (int i = 0; i < s; ++i) {
                if (mask >> i & 1u) {
                    image |= 1u << slot_index[p[slots[i].first] * n + p[slots[i].second]];
                }
            }
            canon = std::min(canon, image);
        }
        if (!seen.insert(canon).second) {
            continue;
        }
        EdgeList edges;
        for (int i = 0; i < s; ++i) {
            if (canon >> i & 1u) {
                edges.emplace_back(slots[i].first, slots[i].second);
            }
        }
        Graph g(n, edges);
        if (rigidity::is_connected(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

/// Labelled set partitions of {0..n-1} by recursive insertion.
inline void all_set_partitions(int n, int next, std::vector<std::vector<int>>& current,
                               std::vector<std::vector<std::vector<int>>>& out) {
    if (next == n) {
        out.push_back(current);
        return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
        current[b].push_back(next);
        all_set_partitions(n, next + 1, current, out);
        current[b].pop_back();
    }
    current.push_back({next});
    all_set_partitions(n, next + 1, current, out);
    current.pop_back();
}

/// Seeded G(n,p) drawn independently of the library generators.
inline Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

inline std::vector<Vertex> random_subset(int n, int size, std::mt19937_64& rng) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace oracle
