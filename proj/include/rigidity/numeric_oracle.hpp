#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// 2^62 - 57, the largest prime below 2^62.
inline constexpr std::uint64_t kFieldPrime = 4611686018427387847ULL;
inline constexpr std::uint64_t kDefaultOracleSeed = 0x5eed0f0dd1ceULL;
inline constexpr int kDefaultOracleTrials = 3;

/// Plane coordinates over GF(p), one pair per vertex.
struct Placement {
    std::vector<std::uint64_t> x;
    std::vector<std::uint64_t> y;
    std::uint64_t seed = 0;
};

/// Uniform placement; redrawn (with a derived seed) until no edge has coincident endpoints.
Placement random_placement(const Graph& g, std::uint64_t seed);

/// m x 2n matrix over GF(p); the row of uv holds p(u)-p(v) in u's columns and p(v)-p(u) in v's.
struct RigidityMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint64_t> entries;  // row-major

    std::uint64_t operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

RigidityMatrix rigidity_matrix(const Graph& g, const Placement& placement);

/// Rank over GF(p) by Gaussian elimination.
int field_rank(RigidityMatrix m);

int numeric_rank(const Graph& g, std::uint64_t seed);

/// One-sided randomized rigidity test: false negatives have probability
/// O(n^2/p) per trial, false positives cannot occur.
bool is_rigid_numeric(const Graph& g, int trials = kDefaultOracleTrials,
                      std::uint64_t seed = kDefaultOracleSeed);

}  // namespace rigidity
