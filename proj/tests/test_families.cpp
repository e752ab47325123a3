#include <gtest/gtest.h>

#include "rigidity/error.hpp"
#include "rigidity/families.hpp"
#include "rigidity/sparsity.hpp"
#include "rigidity/spectral.hpp"

using namespace rigidity;

TEST(Hd, SizesAndRegularity) {
    for (int d = 6; d <= 12; ++d) {
        const Graph h = gen_hd(d);
        EXPECT_EQ(h.order(), 5 * (d + 1));
        EXPECT_EQ(h.size(), 5 * d * (d + 1) / 2);
        EXPECT_TRUE(h.is_regular());
        EXPECT_EQ(h.min_degree(), d);
        EXPECT_TRUE(is_connected(h));
        EXPECT_FALSE(is_rigid(h));
        const double mu = mu2(h);
        EXPECT_GT(mu, 5.0 / (d + 3));
        EXPECT_LE(mu, 5.0 / (d + 1) + 1e-8);
    }
    const Graph h10 = gen_hd(10);
    EXPECT_EQ(h10.order(), 55);
    EXPECT_EQ(h10.size(), 275);
}

TEST(Hd, LabelingAndConnectors) {
    const int d = 8;
    const Graph h = gen_hd(d);
    for (int i = 0; i < 5; ++i) {
        const Vertex a = hd_vertex(d, i, HdRole::a);
        EXPECT_EQ(a, i * (d + 1));
        EXPECT_EQ(hd_vertex(d, i, HdRole::v), i * (d + 1) + 3);
        EXPECT_FALSE(h.has_edge(a, hd_vertex(d, i, HdRole::b)));
        EXPECT_FALSE(h.has_edge(hd_vertex(d, i, HdRole::u), hd_vertex(d, i, HdRole::v)));
        EXPECT_EQ(hd_copy(d, i).size(), static_cast<std::size_t>(d + 1));
    }
    const EdgeList f = hd_connectors(d);
    ASSERT_EQ(f.size(), 10u);
    // b1a2 and u1v3 in one-based naming.
    EXPECT_EQ(f[0], Edge(hd_vertex(d, 0, HdRole::b), hd_vertex(d, 1, HdRole::a)));
    EXPECT_EQ(f[4], Edge(hd_vertex(d, 4, HdRole::b), hd_vertex(d, 0, HdRole::a)));
    EXPECT_EQ(f[5], Edge(hd_vertex(d, 0, HdRole::u), hd_vertex(d, 2, HdRole::v)));
    EXPECT_EQ(f[9], Edge(hd_vertex(d, 3, HdRole::u), hd_vertex(d, 0, HdRole::v)));
    for (const Edge& e : f) EXPECT_TRUE(h.has_edge(e.u, e.v));
    EXPECT_THROW(gen_hd(5), InputError);
}

TEST(Basic, Examples) {
    EXPECT_EQ(gen_complete(4).size(), 6);
    const Graph k = gen_complete_minus_2matching(10);
    EXPECT_EQ(k.order(), 11);
    EXPECT_EQ(k.size(), 53);
    int nine = 0;
    int ten = 0;
    for (Vertex v = 0; v < 11; ++v) {
        nine += k.degree(v) == 9;
        ten += k.degree(v) == 10;
    }
    EXPECT_EQ(nine, 4);
    EXPECT_EQ(ten, 7);
    EXPECT_EQ(gen_complete_bipartite(3, 3).size(), 9);
    EXPECT_EQ(gen_cycle(5).size(), 5);
    EXPECT_EQ(gen_path(5).size(), 4);
    EXPECT_EQ(gen_petersen().size(), 15);
    EXPECT_THROW(gen_complete_minus_2matching(3), InputError);
    EXPECT_THROW(gen_complete(0), InputError);
}

TEST(Laman, SmallCases) {
    EXPECT_EQ(gen_henneberg_laman(2, 1), gen_complete(2));
    EXPECT_EQ(gen_henneberg_laman(3, 1), gen_complete(3));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = gen_henneberg_laman(10, seed);
        EXPECT_EQ(g.size(), 17);
        EXPECT_TRUE(is_rigid(g));
        EXPECT_FALSE(is_redundantly_rigid(g));
    }
}

TEST(Laman, Reproducible) { EXPECT_EQ(gen_henneberg_laman(30, 5), gen_henneberg_laman(30, 5)); }

TEST(Paley, Examples) {
    const Graph p13 = gen_paley(13);
    EXPECT_EQ(p13.order(), 13);
    EXPECT_EQ(p13.size(), 39);
    EXPECT_TRUE(p13.is_regular());
    EXPECT_EQ(p13.min_degree(), 6);
    // Self-complementary: the complement is isomorphic via multiplication by a non-residue (2).
    for (Vertex u = 0; u < 13; ++u) {
        for (Vertex v = u + 1; v < 13; ++v) {
            EXPECT_NE(p13.has_edge(u, v), p13.has_edge(2 * u % 13, 2 * v % 13));
        }
    }
    const Graph p17 = gen_paley(17);
    EXPECT_EQ(p17.min_degree(), 8);
    EXPECT_TRUE(p17.is_regular());
    EXPECT_TRUE(is_ramanujan(p17));
    EXPECT_THROW(gen_paley(7), InputError);
    EXPECT_THROW(gen_paley(21), InputError);
}

TEST(RandomRegular, AlwaysSimpleAndRegular) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = gen_random_regular(20, 7, seed);
        EXPECT_TRUE(g.is_regular());
        EXPECT_EQ(g.min_degree(), 7);
        EXPECT_EQ(g.size(), 70);
    }
    for (int d = 6; d <= 10; ++d) {
        const Graph g = gen_random_regular(60, d, 3);
        EXPECT_EQ(g.min_degree(), d);
        EXPECT_EQ(g.max_degree(), d);
    }
    EXPECT_EQ(gen_random_regular(30, 6, 11), gen_random_regular(30, 6, 11));
    EXPECT_THROW(gen_random_regular(7, 3, 1), InputError);
    EXPECT_THROW(gen_random_regular(5, 5, 1), InputError);
}

TEST(Gnp, ExtremesAndReproducibility) {
    EXPECT_EQ(gen_gnp(8, 0.0, 1).size(), 0);
    EXPECT_EQ(gen_gnp(8, 1.0, 1).size(), 28);
    EXPECT_EQ(gen_gnp(12, 0.3, 4), gen_gnp(12, 0.3, 4));
    EXPECT_THROW(gen_gnp(8, 1.5, 1), InputError);
}

TEST(FamilySpec, ParseFormatRoundTrip) {
    for (const char* text : {"hd:d=10", "complete:n=7", "k2match:d=6", "cycle:n=4", "path:n=5", "bipartite:a=3,b=4",
                             "petersen", "laman:n=12,seed=3", "regular:n=20,d=7,seed=9", "paley:q=17",
                             "gnp:n=10,p=0.25,seed=2"}) {
        const FamilySpec spec = parse_family_spec(text);
        EXPECT_EQ(format_family_spec(spec), text);
        EXPECT_EQ(parse_family_spec(format_family_spec(spec)), spec);
        const Graph g = generate(spec);
        const ExpectedShape shape = expected_shape(spec);
        EXPECT_EQ(g.order(), shape.order) << text;
        if (shape.size) EXPECT_EQ(g.size(), *shape.size) << text;
        if (shape.regular_degree) {
            EXPECT_TRUE(g.is_regular()) << text;
            EXPECT_EQ(g.min_degree(), *shape.regular_degree) << text;
        }
    }
}

TEST(FamilySpec, Errors) {
    EXPECT_THROW(parse_family_spec("nosuch:n=3"), InputError);
    EXPECT_THROW(parse_family_spec("complete:n=x"), InputError);
    EXPECT_THROW(parse_family_spec("complete:z=3"), InputError);
    EXPECT_THROW(parse_family_spec("gnp:n=3,p=abc"), InputError);
}
