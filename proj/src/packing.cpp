#include "rigidity/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>

#include "rigidity/error.hpp"
#include "rigidity/sparsity.hpp"

namespace rigidity {

namespace {

PebbleGame build_game(int n, const EdgeList& edges, const std::vector<int>& owner, int set) {
    PebbleGame game(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (owner[i] == set && !game.try_add(edges[i])) {
            throw std::logic_error("matroid union produced a dependent part");
        }
    }
    return game;
}

// Visits every restricted-growth string of the given length.
template <typename Visit>
void for_each_partition_labels(int length, Visit&& visit) {
    std::vector<int> labels(length, 0);
    std::vector<int> prefix_max(length, 0);
    if (length == 0) {
        return;
    }
    while (true) {
        visit(labels);
        int i = length - 1;
        while (i > 0 && labels[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (int j = i + 1; j < length; ++j) {
            labels[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

}  // namespace

PackingResult pack_spanning_rigid(const Graph& g, int k) {
    const int n = g.order();
    if (n < 3) {
        throw PreconditionError("pack_spanning_rigid needs n >= 3");
    }
    if (k < 1) {
        throw PreconditionError("pack_spanning_rigid needs k >= 1");
    }
    const EdgeList& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int basis_size = 2 * n - 3;
    const int target = k * basis_size;

    std::vector<int> owner(m, -1);
    std::vector<PebbleGame> games(k, PebbleGame(n));
    int total = 0;

    std::vector<int> pred(m);
    std::vector<char> seen(m);
    for (int start = 0; start < m && total < target; ++start) {
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<int> queue;
        queue.push(start);
        seen[start] = 1;
        pred[start] = -1;
        int sink_element = -1;
        int sink_set = -1;
        while (!queue.empty() && sink_element < 0) {
            const int x = queue.front();
            queue.pop();
            for (int s = 0; s < k && sink_element < 0; ++s) {
                if (owner[x] == s) {
                    continue;
                }
                PebbleGame& game = games[s];
                if (!game.in_closure(edges[x])) {
                    sink_element = x;
                    sink_set = s;
                    break;
                }
                // Elements y of set s with I_s - y + x independent: the circuit of x.
                for (int y = 0; y < m; ++y) {
                    if (owner[y] != s || seen[y]) {
                        continue;
                    }
                    game.remove(edges[y]);
                    const bool exchange = !game.in_closure(edges[x]);
                    if (!game.try_add(edges[y])) {
                        throw std::logic_error("pebble game failed to restore an independent edge");
                    }
                    if (exchange) {
                        seen[y] = 1;
                        pred[y] = x;
                        queue.push(y);
                    }
                }
            }
        }
        if (sink_element < 0) {
            continue;
        }
        // x_t joins the sink set; each earlier x_{j-1} takes the place of x_j.
        std::vector<char> touched(k, 0);
        touched[sink_set] = 1;
        int carry_set = sink_set;
        for (int x = sink_element; x != -1; x = pred[x]) {
            const int previous = owner[x];
            owner[x] = carry_set;
            if (previous >= 0) {
                touched[previous] = 1;
            }
            carry_set = previous;
        }
        for (int s = 0; s < k; ++s) {
            if (touched[s]) {
                games[s] = build_game(n, edges, owner, s);
            }
        }
        ++total;
    }

    PackingResult result;
    result.k = k;
    result.union_rank = total;
    result.found = total == target;
    if (result.found) {
        result.parts.resize(k);
        for (int i = 0; i < m; ++i) {
            if (owner[i] >= 0) {
                result.parts[owner[i]].push_back(edges[i]);
            }
        }
    }
    return result;
}

PackingResult pack_spanning_2connected(const Graph& g, int k) {
    auto result = pack_spanning_rigid(g, k);
    for (const auto& part : result.parts) {
        if (!is_k_connected(Graph(g.order(), part), 2)) {
            throw std::logic_error("spanning rigid part is not 2-connected");
        }
    }
    return result;
}

PartitionConditionResult partition_condition_oracle(const Graph& g, int k) {
    const int n = g.order();
    if (n > kPartitionOracleMaxOrder) {
        throw SizeGuardError("partition_condition_oracle enumerates all (Z, partition) pairs; n = " +
                             std::to_string(n) + " exceeds " + std::to_string(kPartitionOracleMaxOrder));
    }
    if (k < 1) {
        throw PreconditionError("partition_condition_oracle needs k >= 1");
    }
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t z = 0; z < full; ++z) {
        masks.push_back(z);
    }
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    PartitionConditionResult result;
    std::vector<int> part_of(n);
    for (std::uint32_t z : masks) {
        const int z_size = std::popcount(z);
        VertexSet rest;
        VertexSet z_set;
        for (Vertex v = 0; v < n; ++v) {
            ((z >> v) & 1u ? z_set : rest).push_back(v);
        }
        // |N(u) ∩ Z| per remaining vertex; edges of G - Z.
        std::vector<int> z_neighbors(n, 0);
        EdgeList inner;
        for (const Edge& e : g.edges()) {
            const bool zu = (z >> e.u) & 1u;
            const bool zv = (z >> e.v) & 1u;
            if (!zu && !zv) {
                inner.push_back(e);
            } else if (zu && !zv) {
                ++z_neighbors[e.v];
            } else if (zv && !zu) {
                ++z_neighbors[e.u];
            }
        }

        std::vector<int> best_labels;
        int best_parts = -1;
        long long best_lhs = 0;
        long long best_rhs = 0;
        const int r = static_cast<int>(rest.size());
        std::vector<int> part_size(r);
        for_each_partition_labels(r, [&](const std::vector<int>& labels) {
            ++result.instances_checked;
            int parts = 0;
            std::fill(part_size.begin(), part_size.end(), 0);
            for (int i = 0; i < r; ++i) {
                part_of[rest[i]] = labels[i];
                parts = std::max(parts, labels[i] + 1);
                ++part_size[labels[i]];
            }
            long long cross = 0;
            for (const Edge& e : inner) {
                cross += part_of[e.u] != part_of[e.v];
            }
            long long trivial = 0;
            long long n_z = 0;
            for (int i = 0; i < r; ++i) {
                if (part_size[labels[i]] == 1) {
                    ++trivial;
                    n_z += z_neighbors[rest[i]];
                }
            }
            const long long nontrivial = parts - trivial;
            const long long rhs = static_cast<long long>(k) * (3 - z_size) * nontrivial + 2LL * k * trivial -
                                  3LL * k - n_z;
            if (cross < rhs && parts > best_parts) {
                best_parts = parts;
                best_labels = labels;
                best_lhs = cross;
                best_rhs = rhs;
            }
        });
        if (best_parts >= 0) {
            result.holds = false;
            result.violation = PartitionViolation{z_set, Partition::from_labels(rest, best_labels), best_lhs, best_rhs};
            return result;
        }
    }
    return result;
}

}  // namespace rigidity
