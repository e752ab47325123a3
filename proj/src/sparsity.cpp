#include "rigidity/sparsity.hpp"

#include <algorithm>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

PebbleGame::PebbleGame(int n) : pebbles_(n, 2), out_(n), visit_stamp_(n, 0), parent_(n, -1) {
    if (n < 1) {
        throw InputError("pebble game needs at least one vertex");
    }
}

void PebbleGame::reverse(Vertex tail, Vertex head) {
    auto& from = out_[tail];
    from.erase(std::lower_bound(from.begin(), from.end(), head));
    auto& to = out_[head];
    to.insert(std::lower_bound(to.begin(), to.end(), tail), tail);
}

// DFS along out-edges for a free pebble not sitting on `pinned`; on success the
// path is reversed, which moves that pebble to `root`.
bool PebbleGame::gather(Vertex root, Vertex pinned) {
    if (++stamp_ == 0) {
        std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
        stamp_ = 1;
    }
    std::vector<std::pair<Vertex, std::size_t>> stack;
    visit_stamp_[root] = stamp_;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (next == out_[x].size()) {
            stack.pop_back();
            continue;
        }
        const Vertex y = out_[x][next++];
        if (visit_stamp_[y] == stamp_) {
            continue;
        }
        visit_stamp_[y] = stamp_;
        parent_[y] = x;
        if (y != pinned && pebbles_[y] > 0) {
            --pebbles_[y];
            ++pebbles_[root];
            for (Vertex c = y; c != root; c = parent_[c]) {
                reverse(parent_[c], c);
            }
            return true;
        }
        stack.emplace_back(y, 0);
    }
    return false;
}

bool PebbleGame::try_add(Edge e) {
    if (e.u == e.v || e.u < 0 || e.v >= order()) {
        throw InputError("pebble game: invalid edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    while (pebbles_[e.u] < 2 && gather(e.u, e.v)) {
    }
    while (pebbles_[e.v] < 2 && gather(e.v, e.u)) {
    }
    if (pebbles_[e.u] + pebbles_[e.v] < 4) {
        return false;
    }
    --pebbles_[e.u];
    auto& out = out_[e.u];
    out.insert(std::lower_bound(out.begin(), out.end(), e.v), e.v);
    accepted_.push_back(e);
    return true;
}

void PebbleGame::remove(Edge e) {
    auto it = std::find(accepted_.begin(), accepted_.end(), e);
    if (it == accepted_.end()) {
        throw InputError("pebble game: edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                         " is not accepted");
    }
    accepted_.erase(it);
    for (auto [tail, head] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        auto& out = out_[tail];
        auto pos = std::lower_bound(out.begin(), out.end(), head);
        if (pos != out.end() && *pos == head) {
            out.erase(pos);
            ++pebbles_[tail];
            return;
        }
    }
}

bool PebbleGame::in_closure(Edge e) {
    if (try_add(e)) {
        remove(e);
        return false;
    }
    return true;
}

std::vector<std::pair<Vertex, Vertex>> PebbleGame::orientation() const {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex v = 0; v < order(); ++v) {
        for (Vertex w : out_[v]) {
            arcs.emplace_back(v, w);
        }
    }
    return arcs;
}

RankResult rigidity_rank(int n, std::span<const Edge> edges) {
    PebbleGame game(n);
    for (const Edge& e : edges) {
        game.try_add(e);
    }
    return {game.rank(), game.accepted()};
}

RankResult rigidity_rank(const Graph& g) { return rigidity_rank(g.order(), g.edges()); }

bool is_rigid(const Graph& g) {
    const int n = g.order();
    if (n == 1) {
        return true;
    }
    return rigidity_rank(g).rank == 2 * n - 3;
}

std::optional<EdgeList> extract_spanning_tight(const Graph& g) {
    if (g.order() == 1) {
        return EdgeList{};
    }
    auto result = rigidity_rank(g);
    if (result.rank != 2 * g.order() - 3) {
        return std::nullopt;
    }
    return std::move(result.independent);
}

bool is_redundantly_rigid(const Graph& g) {
    const int n = g.order();
    if (!is_rigid(g)) {
        return false;
    }
    const auto& edges = g.edges();
    EdgeList rest;
    rest.reserve(edges.size());
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        rest.clear();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i != skip) {
                rest.push_back(edges[i]);
            }
        }
        if (rigidity_rank(n, rest).rank != 2 * n - 3) {
            return false;
        }
    }
    return true;
}

bool is_globally_rigid(const Graph& g) {
    if (g.order() <= 3) {
        return g.is_complete();
    }
    return is_k_connected(g, 3) && is_redundantly_rigid(g);
}

std::vector<VertexSet> rigid_components(const Graph& g) {
    const int n = g.order();
    PebbleGame game(n);
    for (const Edge& e : g.edges()) {
        game.try_add(e);
    }
    std::vector<VertexSet> components;
    std::vector<std::vector<int>> component_of(n);  // component ids per vertex
    auto covered = [&](const Edge& e) {
        for (int a : component_of[e.u]) {
            if (std::find(component_of[e.v].begin(), component_of[e.v].end(), a) != component_of[e.v].end()) {
                return true;
            }
        }
        return false;
    };
    // A third vertex w joins the component of uv iff uw and vw are both spanned.
    for (const Edge& e : g.edges()) {
        if (covered(e)) {
            continue;
        }
        VertexSet block = {e.u, e.v};
        for (Vertex w = 0; w < n; ++w) {
            if (w != e.u && w != e.v && game.in_closure(Edge(e.u, w)) && game.in_closure(Edge(e.v, w))) {
                block.push_back(w);
            }
        }
        std::sort(block.begin(), block.end());
        const int id = static_cast<int>(components.size());
        for (Vertex v : block) {
            component_of[v].push_back(id);
        }
        components.push_back(std::move(block));
    }
    return components;
}

}  // namespace rigidity
