#include "rigidity/families.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "rigidity/error.hpp"
#include "rigidity/random.hpp"

namespace rigidity {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw InputError(message);
    }
}

bool is_prime(int q) {
    if (q < 2) {
        return false;
    }
    for (int f = 2; static_cast<long long>(f) * f <= q; ++f) {
        if (q % f == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

Vertex hd_vertex(int d, int copy, HdRole role) {
    return ((copy % 5 + 5) % 5) * (d + 1) + static_cast<int>(role);
}

VertexSet hd_copy(int d, int copy) {
    VertexSet out(d + 1);
    for (int i = 0; i <= d; ++i) {
        out[i] = copy * (d + 1) + i;
    }
    return out;
}

EdgeList hd_connectors(int d) {
    EdgeList f;
    for (int i = 0; i < 5; ++i) {
        f.emplace_back(hd_vertex(d, i, HdRole::b), hd_vertex(d, i + 1, HdRole::a));
    }
    for (int i : {0, 2, 4, 1, 3}) {
        f.emplace_back(hd_vertex(d, i, HdRole::u), hd_vertex(d, i + 2, HdRole::v));
    }
    return f;
}

Graph gen_hd(int d) {
    require(d >= 6, "H_d needs d >= 6");
    EdgeList edges;
    for (int copy = 0; copy < 5; ++copy) {
        const int base = copy * (d + 1);
        for (int i = 0; i <= d; ++i) {
            for (int j = i + 1; j <= d; ++j) {
                if ((i == 0 && j == 1) || (i == 2 && j == 3)) {
                    continue;
                }
                edges.emplace_back(base + i, base + j);
            }
        }
    }
    const auto f = hd_connectors(d);
    edges.insert(edges.end(), f.begin(), f.end());
    return Graph(5 * (d + 1), edges);
}

Graph gen_complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph gen_complete_minus_2matching(int d) {
    require(d >= 4, "K_{d+1} minus two disjoint edges needs d >= 4");
    EdgeList edges;
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            if (!((i == 0 && j == 1) || (i == 2 && j == 3))) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(d + 1, edges);
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, edges);
}

Graph gen_path(int n) {
    require(n >= 1, "path needs n >= 1");
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete bipartite graph needs both sides nonempty");
    EdgeList edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) {
            edges.emplace_back(i, a + j);
        }
    }
    return Graph(a + b, edges);
}

Graph gen_petersen() {
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph gen_henneberg_laman(int n, std::uint64_t seed) {
    require(n >= 2, "Laman graph needs n >= 2");
    Rng rng(seed);
    EdgeList edges = {Edge(0, 1)};
    for (Vertex v = 2; v < n; ++v) {
        const bool split = v >= 3 && rng.below(2) == 1;
        if (!split) {
            const Vertex a = rng.index(v);
            Vertex b = rng.index(v - 1);
            if (b >= a) {
                ++b;
            }
            edges.emplace_back(v, a);
            edges.emplace_back(v, b);
        } else {
            const int pick = rng.index(static_cast<int>(edges.size()));
            const Edge e = edges[pick];
            edges.erase(edges.begin() + pick);
            Vertex c = rng.index(v - 2);
            for (Vertex skip : {std::min(e.u, e.v), std::max(e.u, e.v)}) {
                if (c >= skip) {
                    ++c;
                }
            }
            edges.emplace_back(v, e.u);
            edges.emplace_back(v, e.v);
            edges.emplace_back(v, c);
        }
    }
    return Graph(n, edges);
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
    require(n >= 1 && d >= 0 && d < n, "random regular graph needs 0 <= d < n");
    require((static_cast<long long>(n) * d) % 2 == 0, "random regular graph needs n*d even");
    Rng rng(seed);
    while (true) {
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < n; ++v) {
            stubs.insert(stubs.end(), d, v);
        }
        std::vector<char> adjacent(static_cast<std::size_t>(n) * n, 0);
        EdgeList edges;
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            bool paired = false;
            for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
                const int i = rng.index(static_cast<int>(stubs.size()));
                const int j = rng.index(static_cast<int>(stubs.size()));
                const Vertex u = stubs[i];
                const Vertex v = stubs[j];
                if (i == j || u == v || adjacent[static_cast<std::size_t>(u) * n + v]) {
                    continue;
                }
                adjacent[static_cast<std::size_t>(u) * n + v] = adjacent[static_cast<std::size_t>(v) * n + u] = 1;
                edges.emplace_back(u, v);
                for (int k : {std::max(i, j), std::min(i, j)}) {
                    stubs[k] = stubs.back();
                    stubs.pop_back();
                }
                paired = true;
            }
            if (!paired) {
                // Restart only when no admissible pair is left at all.
                stuck = true;
                for (std::size_t i = 0; i < stubs.size() && stuck; ++i) {
                    for (std::size_t j = i + 1; j < stubs.size() && stuck; ++j) {
                        const Vertex u = stubs[i];
                        const Vertex v = stubs[j];
                        if (u != v && !adjacent[static_cast<std::size_t>(u) * n + v]) {
                            stuck = false;
                        }
                    }
                }
            }
        }
        if (!stuck) {
            return Graph(n, edges);
        }
    }
}

Graph gen_paley(int q) {
    require(is_prime(q), "Paley graph needs a prime q");
    require(q % 4 == 1, "Paley graph needs q = 1 mod 4");
    std::vector<char> residue(q, 0);
    for (long long x = 1; x < q; ++x) {
        residue[(x * x) % q] = 1;
    }
    EdgeList edges;
    for (int i = 0; i < q; ++i) {
        for (int j = i + 1; j < q; ++j) {
            if (residue[j - i]) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(q, edges);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 1, "G(n,p) needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "G(n,p) needs 0 <= p <= 1");
    Rng rng(seed);
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.unit() < p) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

FamilySpec parse_family_spec(std::string_view text) {
    FamilySpec spec;
    const auto colon = text.find(':');
    spec.family = std::string(text.substr(0, colon));
    require(!spec.family.empty(), "family spec needs a family name");
    static const std::set<std::string, std::less<>> known{"hd",      "complete", "k2match", "cycle",
                                                          "path",    "bipartite", "petersen", "laman",
                                                          "regular", "paley",     "gnp"};
    require(known.contains(spec.family), "unknown family '" + spec.family + "'");
    if (colon == std::string_view::npos) {
        return spec;
    }
    std::string rest(text.substr(colon + 1));
    std::istringstream fields(rest);
    std::string field;
    while (std::getline(fields, field, ',')) {
        const auto eq = field.find('=');
        require(eq != std::string::npos, "family parameter '" + field + "' must be key=value");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        auto as_int = [&]() {
            long long out = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
            require(ec == std::errc{} && ptr == value.data() + value.size(), "bad integer '" + value + "'");
            return out;
        };
        if (key == "n") {
            spec.n = static_cast<int>(as_int());
        } else if (key == "d") {
            spec.d = static_cast<int>(as_int());
        } else if (key == "q") {
            spec.q = static_cast<int>(as_int());
        } else if (key == "a") {
            spec.a = static_cast<int>(as_int());
        } else if (key == "b") {
            spec.b = static_cast<int>(as_int());
        } else if (key == "seed") {
            spec.seed = static_cast<std::uint64_t>(as_int());
        } else if (key == "p") {
            try {
                std::size_t used = 0;
                spec.p = std::stod(value, &used);
                require(used == value.size(), "bad probability '" + value + "'");
            } catch (const std::logic_error&) {
                throw InputError("bad probability '" + value + "'");
            }
        } else {
            throw InputError("unknown family parameter '" + key + "'");
        }
    }
    return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
    std::ostringstream out;
    out << spec.family;
    const char* sep = ":";
    auto put = [&](const char* key, auto value) {
        out << sep << key << '=' << value;
        sep = ",";
    };
    const auto& f = spec.family;
    if (f == "hd" || f == "k2match") {
        put("d", spec.d);
    } else if (f == "complete" || f == "cycle" || f == "path") {
        put("n", spec.n);
    } else if (f == "bipartite") {
        put("a", spec.a);
        put("b", spec.b);
    } else if (f == "laman") {
        put("n", spec.n);
        put("seed", spec.seed);
    } else if (f == "regular") {
        put("n", spec.n);
        put("d", spec.d);
        put("seed", spec.seed);
    } else if (f == "paley") {
        put("q", spec.q);
    } else if (f == "gnp") {
        put("n", spec.n);
        out.precision(17);
        put("p", spec.p);
        put("seed", spec.seed);
    }
    return out.str();
}

Graph generate(const FamilySpec& spec) {
    const auto& f = spec.family;
    if (f == "hd") return gen_hd(spec.d);
    if (f == "complete") return gen_complete(spec.n);
    if (f == "k2match") return gen_complete_minus_2matching(spec.d);
    if (f == "cycle") return gen_cycle(spec.n);
    if (f == "path") return gen_path(spec.n);
    if (f == "bipartite") return gen_complete_bipartite(spec.a, spec.b);
    if (f == "petersen") return gen_petersen();
    if (f == "laman") return gen_henneberg_laman(spec.n, spec.seed);
    if (f == "regular") return gen_random_regular(spec.n, spec.d, spec.seed);
    if (f == "paley") return gen_paley(spec.q);
    if (f == "gnp") return gen_gnp(spec.n, spec.p, spec.seed);
    throw InputError("unknown family '" + f + "'");
}

ExpectedShape expected_shape(const FamilySpec& spec) {
    const auto& f = spec.family;
    if (f == "hd") return {5 * (spec.d + 1), 5 * spec.d * (spec.d + 1) / 2, spec.d};
    if (f == "complete") return {spec.n, spec.n * (spec.n - 1) / 2, spec.n - 1};
    if (f == "k2match") return {spec.d + 1, spec.d * (spec.d + 1) / 2 - 2, std::nullopt};
    if (f == "cycle") return {spec.n, spec.n, 2};
    if (f == "path") return {spec.n, spec.n - 1, std::nullopt};
    if (f == "bipartite") {
        return {spec.a + spec.b, spec.a * spec.b, spec.a == spec.b ? std::optional<int>(spec.a) : std::nullopt};
    }
    if (f == "petersen") return {10, 15, 3};
    if (f == "laman") return {spec.n, 2 * spec.n - 3, std::nullopt};
    if (f == "regular") return {spec.n, spec.n * spec.d / 2, spec.d};
    if (f == "paley") return {spec.q, spec.q * (spec.q - 1) / 4, (spec.q - 1) / 2};
    if (f == "gnp") return {spec.n, std::nullopt, std::nullopt};
    throw InputError("unknown family '" + f + "'");
}

}  // namespace rigidity
