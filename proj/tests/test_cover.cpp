#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rigidity/cover.hpp"
#include "rigidity/error.hpp"
#include "rigidity/families.hpp"
#include "rigidity/sparsity.hpp"

using namespace rigidity;

namespace {

Cover per_edge_cover(const Graph& g) {
    Cover c;
    for (const Edge& e : g.edges()) c.blocks.push_back({e.u, e.v});
    return c;
}

Graph triangles_joined_by_edge() {
    return Graph(6, EdgeList{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

}  // namespace

TEST(VerifyCover, HdCanonical) {
    for (int d = 6; d <= 12; ++d) {
        const Cover c = hd_canonical_cover(d);
        EXPECT_EQ(c.blocks.size(), 15u);
        const CoverCheck check = verify_cover(gen_hd(d), c);
        EXPECT_EQ(check.value, 10LL * d + 5);
        EXPECT_EQ(check.threshold, 10LL * d + 7);
        EXPECT_TRUE(check.is_nonrigidity_witness);
    }
    EXPECT_EQ(verify_cover(gen_hd(6), hd_canonical_cover(6)).value, 65);
    EXPECT_EQ(verify_cover(gen_hd(8), hd_canonical_cover(8)).value, 85);
    EXPECT_EQ(verify_cover(gen_hd(10), hd_canonical_cover(10)).value, 105);
    EXPECT_THROW(hd_canonical_cover(5), InputError);
}

TEST(VerifyCover, TrivialCoverOfRigidGraph) {
    const Graph k5 = gen_complete(5);
    const CoverCheck check = verify_cover(k5, Cover{{{0, 1, 2, 3, 4}}});
    EXPECT_EQ(check.value, 7);
    EXPECT_EQ(check.threshold, 7);
    EXPECT_FALSE(check.is_nonrigidity_witness);
}

TEST(VerifyCover, PerEdgeCoverOfC4) {
    const CoverCheck check = verify_cover(gen_cycle(4), per_edge_cover(gen_cycle(4)));
    EXPECT_EQ(check.value, 4);
    EXPECT_EQ(check.threshold, 5);
    EXPECT_TRUE(check.is_nonrigidity_witness);
}

TEST(VerifyCover, MalformedCoversNameTheEdge) {
    const Graph c4 = gen_cycle(4);
    Cover missing = per_edge_cover(c4);
    missing.blocks.pop_back();
    try {
        verify_cover(c4, missing);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("not covered"), std::string::npos) << e.what();
    }
    Cover doubled = per_edge_cover(c4);
    doubled.blocks.push_back({0, 1, 2});
    try {
        verify_cover(c4, doubled);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("edge 0 1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(verify_cover(c4, Cover{{{0}}}), InputError);
    EXPECT_THROW(verify_cover(c4, Cover{{{0, 9}}}), InputError);
}

TEST(SearchWitness, Examples) {
    const auto c4 = search_witness_cover(gen_cycle(4));
    ASSERT_TRUE(c4.has_value());
    EXPECT_EQ(c4->value(), 4);
    EXPECT_FALSE(search_witness_cover(gen_complete(4)).has_value());
    const Graph tt = triangles_joined_by_edge();
    const auto witness = search_witness_cover(tt);
    ASSERT_TRUE(witness.has_value());
    EXPECT_LT(verify_cover(tt, *witness).value, 9);
    EXPECT_THROW(search_witness_cover(gen_complete(11)), SizeGuardError);
}

TEST(SearchWitness, FewestBlocksFirst) {
    // Two K4 sharing one vertex: two blocks suffice (value 5 + 5 = 10 < 11).
    Graph bowtie(7, EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6},
                             {5, 6}});
    const auto c = search_witness_cover(bowtie);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->blocks.size(), 2u);
    EXPECT_EQ(verify_cover(bowtie, *c).value, 10);
}

TEST(SearchWitness, EquivalentToNonRigidityOnSmallGraphs) {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : oracle::connected_graphs_up_to_iso(n)) {
            const auto c = search_witness_cover(g);
            EXPECT_EQ(c.has_value(), !is_rigid(g)) << format_edge_list(g);
            if (c) EXPECT_TRUE(verify_cover(g, *c).is_nonrigidity_witness);
        }
    }
}

TEST(SearchWitness, EquivalentOnRandomGraphsUpToTen) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const int n = 7 + t % 4;
        const Graph g = oracle::random_gnp(n, 0.35 + 0.05 * (t % 5), rng);
        const auto c = search_witness_cover(g);
        EXPECT_EQ(c.has_value(), !is_rigid(g)) << format_edge_list(g);
        if (c) EXPECT_TRUE(verify_cover(g, *c).is_nonrigidity_witness);
    }
}

TEST(RigidComponentCover, WitnessForFlexibleGraphs) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_gnp(3 + t % 20, 0.3, rng);
        const CoverCheck check = verify_cover(g, rigid_component_cover(g));
        EXPECT_EQ(check.is_nonrigidity_witness, !is_rigid(g));
    }
    EXPECT_TRUE(verify_cover(gen_hd(7), rigid_component_cover(gen_hd(7))).is_nonrigidity_witness);
}
