#include "rigidity/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rigidity/error.hpp"
#include "rigidity/families.hpp"
#include "rigidity/sparsity.hpp"

namespace rigidity {

namespace {

struct Candidate {
    std::uint32_t vertices = 0;
    std::uint64_t edges = 0;
    int cost = 0;
};

class WitnessSearch {
public:
    explicit WitnessSearch(const Graph& g) : g_(g), threshold_(2 * g.order() - 3) {
        const int n = g.order();
        const int m = g.size();
        all_edges_ = m == 64 ? ~0ULL : (1ULL << m) - 1;
        containing_.resize(m);
        for (std::uint32_t set = 1; set < (1u << n); ++set) {
            if (std::popcount(set) < 2 || !induces_connected(set)) {
                continue;
            }
            Candidate c{set, 0, 2 * std::popcount(set) - 3};
            for (int i = 0; i < m; ++i) {
                const Edge& e = g.edges()[i];
                if ((set >> e.u & 1u) && (set >> e.v & 1u)) {
                    c.edges |= 1ULL << i;
                }
            }
            best_ratio_ = std::max(best_ratio_, static_cast<double>(std::popcount(c.edges)) / c.cost);
            candidates_.push_back(c);
        }
        // Larger blocks first so small block counts are reached quickly.
        std::stable_sort(candidates_.begin(), candidates_.end(),
                         [](const Candidate& a, const Candidate& b) { return a.cost > b.cost; });
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            for (std::uint64_t bits = candidates_[c].edges; bits != 0; bits &= bits - 1) {
                containing_[std::countr_zero(bits)].push_back(static_cast<int>(c));
            }
        }
    }

    std::optional<Cover> run() {
        const int m = g_.size();
        for (int max_blocks = 0; max_blocks <= m; ++max_blocks) {
            chosen_.clear();
            if (descend(0, 0, max_blocks)) {
                Cover cover;
                for (int c : chosen_) {
                    VertexSet block;
                    for (Vertex v = 0; v < g_.order(); ++v) {
                        if (candidates_[c].vertices >> v & 1u) {
                            block.push_back(v);
                        }
                    }
                    cover.blocks.push_back(std::move(block));
                }
                return cover;
            }
        }
        return std::nullopt;
    }

private:
    bool induces_connected(std::uint32_t set) const {
        const std::uint32_t root = set & (~set + 1);
        std::uint32_t reached = root;
        std::uint32_t frontier = root;
        while (frontier != 0) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (Vertex w : g_.neighbors(v)) {
                const std::uint32_t bit = 1u << w;
                if ((set & bit) && !(reached & bit)) {
                    reached |= bit;
                    frontier |= bit;
                }
            }
        }
        return reached == set;
    }

    bool descend(std::uint64_t covered, long long value, int blocks_left) {
        if (covered == all_edges_) {
            return value < threshold_;
        }
        if (blocks_left == 0) {
            return false;
        }
        const long long budget = threshold_ - 1 - value;
        const int remaining = std::popcount(all_edges_ & ~covered);
        // No block covers more than best_ratio_ edges per unit of cost.
        if (budget < 1 || static_cast<double>(remaining) > best_ratio_ * static_cast<double>(budget) + 1e-9) {
            return false;
        }
        const int edge = std::countr_zero(all_edges_ & ~covered);
        for (int c : containing_[edge]) {
            const Candidate& cand = candidates_[c];
            if ((cand.edges & covered) != 0 || cand.cost > budget) {
                continue;
            }
            chosen_.push_back(c);
            if (descend(covered | cand.edges, value + cand.cost, blocks_left - 1)) {
                return true;
            }
            chosen_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    long long threshold_;
    std::uint64_t all_edges_ = 0;
    double best_ratio_ = 0.0;
    std::vector<Candidate> candidates_;
    std::vector<std::vector<int>> containing_;
    std::vector<int> chosen_;
};

}  // namespace

long long Cover::value() const {
    long long total = 0;
    for (const auto& block : blocks) {
        total += 2 * static_cast<long long>(block.size()) - 3;
    }
    return total;
}

CoverCheck verify_cover(const Graph& g, const Cover& cover) {
    const int n = g.order();
    std::vector<std::vector<char>> member(cover.blocks.size(), std::vector<char>(n, 0));
    for (std::size_t b = 0; b < cover.blocks.size(); ++b) {
        const auto& block = cover.blocks[b];
        if (block.size() < 2) {
            throw InputError("malformed cover: block " + std::to_string(b) + " has fewer than two vertices");
        }
        for (Vertex v : block) {
            if (v < 0 || v >= n) {
                throw InputError("malformed cover: block " + std::to_string(b) + " has vertex " +
                                 std::to_string(v) + " outside the graph");
            }
            if (member[b][v]) {
                throw InputError("malformed cover: block " + std::to_string(b) + " repeats vertex " +
                                 std::to_string(v));
            }
            member[b][v] = 1;
        }
    }
    for (const Edge& e : g.edges()) {
        int hits = 0;
        for (const auto& in : member) {
            hits += in[e.u] && in[e.v];
        }
        if (hits != 1) {
            throw InputError("malformed cover: edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                             (hits == 0 ? " is not covered" : " is covered by more than one block"));
        }
    }
    CoverCheck check;
    check.value = cover.value();
    check.threshold = 2LL * n - 3;
    check.is_nonrigidity_witness = check.value < check.threshold;
    return check;
}

std::optional<Cover> search_witness_cover(const Graph& g) {
    if (g.order() > kCoverSearchMaxOrder) {
        throw SizeGuardError("search_witness_cover is exhaustive; n = " + std::to_string(g.order()) +
                             " exceeds " + std::to_string(kCoverSearchMaxOrder));
    }
    return WitnessSearch(g).run();
}

Cover hd_canonical_cover(int d) {
    if (d < 6) {
        throw InputError("H_d cover needs d >= 6");
    }
    Cover cover;
    for (int copy = 0; copy < 5; ++copy) {
        cover.blocks.push_back(hd_copy(d, copy));
    }
    for (const Edge& e : hd_connectors(d)) {
        cover.blocks.push_back({e.u, e.v});
    }
    return cover;
}

Cover rigid_component_cover(const Graph& g) { return Cover{rigid_components(g)}; }

}  // namespace rigidity
