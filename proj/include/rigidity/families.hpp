#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rigidity/graph.hpp"

namespace rigidity {

/*
 * H_d layout: five copies of K_{d+1} minus the disjoint edges a_i b_i and
 * u_i v_i, copy i (0-based) occupying labels [i(d+1), (i+1)(d+1)) with
 * a_i, b_i, u_i, v_i at offsets 0..3, joined by the ten connector edges
 * b_i a_{i+1} and u_i v_{i+2} (indices mod 5).
 */
enum class HdRole : int { a = 0, b = 1, u = 2, v = 3 };

Vertex hd_vertex(int d, int copy, HdRole role);
/// Vertex set of copy `copy` (0..4).
VertexSet hd_copy(int d, int copy);
/// The ten connector edges, in the order b1a2, b2a3, b3a4, b4a5, b5a1, u1v3, u3v5, u5v2, u2v4, u4v1.
EdgeList hd_connectors(int d);

/// d-regular, 5(d+1) vertices; d >= 6.
Graph gen_hd(int d);

Graph gen_complete(int n);
/// K_{d+1} minus edges {0,1} and {2,3}; d >= 4.
Graph gen_complete_minus_2matching(int d);
Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_petersen();

/// Random Laman graph grown from K2 by Henneberg moves (50/50 vertex addition / edge split).
Graph gen_henneberg_laman(int n, std::uint64_t seed);

/// Uniform-ish simple d-regular graph: random pairing of stubs, rejecting pairs
/// that would create a loop or a repeated edge, restarting when stuck.
Graph gen_random_regular(int n, int d, std::uint64_t seed);

/// Paley graph on a prime q ≡ 1 (mod 4).
Graph gen_paley(int q);

Graph gen_gnp(int n, double p, std::uint64_t seed);

/// A named family member with its parameters; the unit of corpus manifests.
struct FamilySpec {
    std::string family;
    int n = 0;
    int d = 0;
    int q = 0;
    int a = 0;
    int b = 0;
    double p = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Size and degree formulas the generated graph must satisfy exactly.
struct ExpectedShape {
    int order = 0;
    std::optional<int> size;
    std::optional<int> regular_degree;
};

/// Parses "name" or "name:key=value,...", e.g. "hd:d=10", "regular:n=20,d=7,seed=3".
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);
ExpectedShape expected_shape(const FamilySpec& spec);

}  // namespace rigidity
