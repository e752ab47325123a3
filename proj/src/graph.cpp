#include "rigidity/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> set, const char* what) {
    std::vector<char> in(g.order(), 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.order()) {
            throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
        }
        if (in[v]) {
            throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " repeated");
        }
        in[v] = 1;
    }
    return in;
}

// Unit-capacity residual network for vertex-disjoint paths (split-vertex construction).
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, Vertex s, Vertex t) : n_(g.order()), head_(2 * g.order(), -1) {
        const int big = g.order();
        for (Vertex v = 0; v < n_; ++v) {
            add_arc(in(v), out(v), (v == s || v == t) ? big : 1);
        }
        for (const Edge& e : g.edges()) {
            add_arc(out(e.u), in(e.v), 1);
            add_arc(out(e.v), in(e.u), 1);
        }
    }

    int max_flow(Vertex s, Vertex t, int limit) {
        int flow = 0;
        const int source = out(s);
        const int sink = in(t);
        std::vector<int> via(head_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> queue;
            queue.push(source);
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                const int x = queue.front();
                queue.pop();
                for (int a = head_[x]; a != -1; a = next_[a]) {
                    if (cap_[a] > 0 && via[to_[a]] == -1) {
                        via[to_[a]] = a;
                        queue.push(to_[a]);
                    }
                }
            }
            if (via[sink] == -1) {
                break;
            }
            for (int x = sink; x != source; x = to_[via[x] ^ 1]) {
                --cap_[via[x]];
                ++cap_[via[x] ^ 1];
            }
            ++flow;
        }
        return flow;
    }

private:
    static int in(Vertex v) { return 2 * v; }
    static int out(Vertex v) { return 2 * v + 1; }

    void add_arc(int from, int to, int cap) {
        for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
            to_.push_back(b);
            cap_.push_back(c);
            next_.push_back(head_[a]);
            head_[a] = static_cast<int>(to_.size()) - 1;
        }
    }

    int n_;
    std::vector<int> head_;
    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<int> next_;
};

// Even's scheme: some vertex among the first κ+1 lies outside every minimum cut.
int connectivity_up_to(const Graph& g, int limit) {
    const int n = g.order();
    if (g.is_complete()) {
        return std::min(n - 1, limit);
    }
    int best = std::min(g.min_degree(), limit);
    for (Vertex i = 0; i < n && i <= best; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) {
                best = std::min(best, local_connectivity(g, i, j, best));
            }
        }
    }
    return best;
}

}  // namespace

Graph::Graph(int n) {
    if (n < 1) {
        throw InputError("graph must have at least one vertex");
    }
    adjacency_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw InputError("loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v >= n) {
            throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                             " has an endpoint outside 0.." + std::to_string(n - 1));
        }
        auto& nu = adjacency_[e.u];
        auto it = std::lower_bound(nu.begin(), nu.end(), e.v);
        if (it != nu.end() && *it == e.v) {
            continue;
        }
        nu.insert(it, e.v);
        auto& nv = adjacency_[e.v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
        edges_.push_back(e);
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::min_degree() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& nbrs : adjacency_) {
        best = std::min(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency_) {
        best = std::max(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

bool Graph::is_complete() const {
    const long long n = order();
    return size() == n * (n - 1) / 2;
}

Graph Graph::with_edge(Edge e) const {
    EdgeList edges = edges_;
    edges.push_back(e);
    return Graph(order(), edges);
}

Graph Graph::without_edge(Edge e) const {
    EdgeList edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) {
        throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " not in graph");
    }
    edges.erase(it);
    return Graph(order(), edges);
}

Partition::Partition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
    for (auto& part : parts_) {
        if (part.empty()) {
            throw InputError("partition has an empty part");
        }
        std::sort(part.begin(), part.end());
        ground_.insert(ground_.end(), part.begin(), part.end());
    }
    std::sort(ground_.begin(), ground_.end());
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
        throw InputError("partition parts overlap");
    }
    if (!ground_.empty() && ground_.front() < 0) {
        throw InputError("partition contains a negative vertex");
    }
}

Partition Partition::from_labels(std::span<const Vertex> ground, std::span<const int> labels) {
    if (ground.size() != labels.size()) {
        throw InputError("partition labels do not match ground set");
    }
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (labels[i] < 0) {
            throw InputError("negative partition label");
        }
        if (static_cast<std::size_t>(labels[i]) >= parts.size()) {
            parts.resize(labels[i] + 1);
        }
        parts[labels[i]].push_back(ground[i]);
    }
    std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
    return Partition(std::move(parts));
}

VertexSet Partition::trivial_parts() const {
    VertexSet out;
    for (const auto& part : parts_) {
        if (part.size() == 1) {
            out.push_back(part.front());
        }
    }
    return out;
}

int Partition::trivial_count() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                          [](const VertexSet& p) { return p.size() == 1; }));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    EdgeList edges;

    auto fail = [&](const std::string& why) {
        throw InputError("line " + std::to_string(line_no) + ": " + why);
    };
    auto parse_pair = [&](const std::string& s, long long& a, long long& b) {
        std::istringstream fields(s);
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            fail("expected two integers, got '" + s + "'");
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        long long a = 0;
        long long b = 0;
        parse_pair(line, a, b);
        if (n < 0) {
            if (a < 1 || a > std::numeric_limits<int>::max() || b < 0) {
                fail("header must be 'n m' with n >= 1 and m >= 0");
            }
            // The declared m is advisory: repeated edge lines are allowed and collapse.
            n = static_cast<int>(a);
            continue;
        }
        if (a == b) {
            fail("loop at vertex " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= n || b >= n) {
            fail("vertex index out of range 0.." + std::to_string(n - 1));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) {
        throw InputError("missing 'n m' header");
    }
    return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
    const auto in = membership(g, kept, "induced_subgraph");
    if (kept.empty()) {
        throw InputError("induced subgraph on no vertices");
    }
    std::vector<Vertex> label(g.order(), -1);
    std::vector<Vertex> original;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in[v]) {
            label[v] = static_cast<Vertex>(original.size());
            original.push_back(v);
        }
    }
    EdgeList edges;
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v]) {
            edges.emplace_back(label[e.u], label[e.v]);
        }
    }
    return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    const auto out = membership(g, removed, "delete_vertices");
    if (static_cast<int>(removed.size()) == g.order()) {
        throw InputError("delete_vertices: cannot delete every vertex");
    }
    VertexSet kept;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!out[v]) {
            kept.push_back(v);
        }
    }
    return induced_subgraph(g, kept);
}

int boundary(const Graph& g, std::span<const Vertex> subset) {
    const auto in = membership(g, subset, "boundary");
    if (subset.empty() || static_cast<int>(subset.size()) == g.order()) {
        throw InputError("boundary: subset must be nonempty and proper");
    }
    int count = 0;
    for (const Edge& e : g.edges()) {
        count += in[e.u] != in[e.v];
    }
    return count;
}

int cross_edges(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
    const auto in_x = membership(g, x, "cross_edges");
    const auto in_y = membership(g, y, "cross_edges");
    if (x.empty() || y.empty()) {
        throw InputError("cross_edges: sets must be nonempty");
    }
    for (Vertex v : y) {
        if (in_x[v]) {
            throw InputError("cross_edges: sets overlap at vertex " + std::to_string(v));
        }
    }
    int count = 0;
    for (const Edge& e : g.edges()) {
        count += (in_x[e.u] && in_y[e.v]) || (in_x[e.v] && in_y[e.u]);
    }
    return count;
}

int partition_cross_count(const Graph& g, const Partition& partition) {
    if (static_cast<int>(partition.ground().size()) != g.order() ||
        partition.ground().back() >= g.order()) {
        throw InputError("partition_cross_count: partition does not cover V(G)");
    }
    std::vector<int> part_of(g.order());
    for (int i = 0; i < partition.part_count(); ++i) {
        for (Vertex v : partition.parts()[i]) {
            part_of[v] = i;
        }
    }
    int count = 0;
    for (const Edge& e : g.edges()) {
        count += part_of[e.u] != part_of[e.v];
    }
    return count;
}

int n_z_of_partition(const Graph& g, std::span<const Vertex> z, const Partition& partition) {
    const auto in_z = membership(g, z, "n_z_of_partition");
    for (Vertex v : partition.ground()) {
        if (v >= g.order()) {
            throw InputError("n_z_of_partition: partition vertex out of range");
        }
        if (in_z[v]) {
            throw InputError("n_z_of_partition: Z meets the partitioned set at " + std::to_string(v));
        }
    }
    if (partition.ground().size() + z.size() != static_cast<std::size_t>(g.order())) {
        throw InputError("n_z_of_partition: partition must cover V(G) \\ Z");
    }
    int count = 0;
    for (Vertex u : partition.trivial_parts()) {
        for (Vertex w : g.neighbors(u)) {
            count += in_z[w];
        }
    }
    return count;
}

int min_degree(const Graph& g) { return g.min_degree(); }

int component_count(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    int components = 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root]) {
            continue;
        }
        ++components;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
    if (s == t || s < 0 || t < 0 || s >= g.order() || t >= g.order()) {
        throw InputError("local_connectivity: need two distinct vertices");
    }
    if (g.has_edge(s, t)) {
        throw InputError("local_connectivity: endpoints are adjacent");
    }
    SplitNetwork network(g, s, t);
    return network.max_flow(s, t, limit);
}

int vertex_connectivity(const Graph& g) {
    if (g.order() < 2) {
        throw PreconditionError("vertex connectivity needs at least two vertices");
    }
    return connectivity_up_to(g, g.order());
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) {
        return true;
    }
    if (g.order() < 2) {
        return false;
    }
    return connectivity_up_to(g, k) >= k;
}

}  // namespace rigidity
