#include "rigidity/numeric_oracle.hpp"

#include <algorithm>
#include <utility>

#include "rigidity/error.hpp"
#include "rigidity/random.hpp"

namespace rigidity {

namespace {

constexpr std::uint64_t p = kFieldPrime;
__extension__ using uint128 = unsigned __int128;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + p - b; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a) { return pow_mod(a, p - 2); }

std::uint64_t field_element(Rng& rng) {
    while (true) {
        const std::uint64_t x = rng.next() >> 2;
        if (x < p) {
            return x;
        }
    }
}

}  // namespace

Placement random_placement(const Graph& g, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Placement placement;
        placement.seed = attempt == 0 ? seed : mix_seed(seed + attempt);
        Rng rng(placement.seed);
        placement.x.resize(g.order());
        placement.y.resize(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            placement.x[v] = field_element(rng);
            placement.y[v] = field_element(rng);
        }
        const bool degenerate = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            return placement.x[e.u] == placement.x[e.v] && placement.y[e.u] == placement.y[e.v];
        });
        if (!degenerate) {
            return placement;
        }
    }
}

RigidityMatrix rigidity_matrix(const Graph& g, const Placement& placement) {
    RigidityMatrix m;
    m.rows = g.size();
    m.cols = 2 * g.order();
    m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (int r = 0; r < m.rows; ++r) {
        const Edge& e = g.edges()[r];
        const std::uint64_t dx = sub_mod(placement.x[e.u], placement.x[e.v]);
        const std::uint64_t dy = sub_mod(placement.y[e.u], placement.y[e.v]);
        std::uint64_t* row = &m.entries[static_cast<std::size_t>(r) * m.cols];
        row[2 * e.u] = dx;
        row[2 * e.u + 1] = dy;
        row[2 * e.v] = sub_mod(0, dx);
        row[2 * e.v + 1] = sub_mod(0, dy);
    }
    return m;
}

int field_rank(RigidityMatrix m) {
    int rank = 0;
    auto at = [&](int r, int c) -> std::uint64_t& { return m.entries[static_cast<std::size_t>(r) * m.cols + c]; };
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = rank;
        while (pivot < m.rows && at(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == m.rows) {
            continue;
        }
        if (pivot != rank) {
            for (int j = c; j < m.cols; ++j) {
                std::swap(at(pivot, j), at(rank, j));
            }
        }
        const std::uint64_t inv = inverse_mod(at(rank, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            if (at(r, c) == 0) {
                continue;
            }
            const std::uint64_t factor = mul_mod(at(r, c), inv);
            for (int j = c; j < m.cols; ++j) {
                at(r, j) = sub_mod(at(r, j), mul_mod(factor, at(rank, j)));
            }
        }
        ++rank;
    }
    return rank;
}

int numeric_rank(const Graph& g, std::uint64_t seed) {
    if (g.order() < 2) {
        throw PreconditionError("numeric_rank needs at least two vertices");
    }
    return field_rank(rigidity_matrix(g, random_placement(g, seed)));
}

bool is_rigid_numeric(const Graph& g, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InputError("is_rigid_numeric needs at least one trial");
    }
    const int n = g.order();
    if (n == 1) {
        return true;
    }
    const int target = 2 * n - 3;
    for (int t = 0; t < trials; ++t) {
        if (numeric_rank(g, mix_seed(seed + static_cast<std::uint64_t>(t))) == target) {
            return true;
        }
    }
    return false;
}

}  // namespace rigidity
