#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rigidity/certify.hpp"
#include "rigidity/error.hpp"
#include "rigidity/families.hpp"
#include "rigidity/packing.hpp"
#include "rigidity/sparsity.hpp"
#include "rigidity/spectral.hpp"

using namespace rigidity;

namespace {

std::vector<Graph> dense_corpus() {
    std::vector<Graph> corpus;
    for (int n = 7; n <= 14; ++n) corpus.push_back(gen_complete(n));
    for (int d = 6; d <= 9; ++d) corpus.push_back(gen_complete_minus_2matching(d));
    corpus.push_back(gen_paley(13));
    corpus.push_back(gen_paley(17));
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        corpus.push_back(gen_random_regular(14 + 2 * static_cast<int>(seed % 4), 6 + static_cast<int>(seed % 4), seed));
    }
    for (std::uint64_t seed = 0; seed < 8; ++seed) corpus.push_back(gen_gnp(14, 0.75, seed));
    corpus.push_back(gen_hd(6));
    return corpus;
}

}  // namespace

TEST(Eigkrig, CompleteGraphK7) {
    const Certificate c = certify_eigkrig(gen_complete(7), 1);
    EXPECT_EQ(c.verdict, Verdict::certified);
    ASSERT_EQ(c.conditions.size(), 4u);
    EXPECT_TRUE(c.conditions[0].precondition);
    EXPECT_NEAR(c.conditions[1].lhs, 7.0, 1e-9);
    EXPECT_NEAR(c.conditions[1].rhs, 5.0 / 7.0, 1e-15);
    EXPECT_NEAR(c.conditions[2].lhs, 6.0, 1e-9);
    EXPECT_NEAR(c.conditions[2].rhs, 3.0 / 6.0, 1e-15);
    EXPECT_NEAR(c.conditions[3].lhs, 5.0, 1e-9);
    EXPECT_NEAR(c.conditions[3].rhs, 1.0 / 5.0, 1e-15);
    for (const auto& cond : c.conditions) {
        if (!cond.precondition) EXPECT_GT(cond.margin, kStrictEpsilon);
    }
    EXPECT_EQ(c.first_unmet(), nullptr);
}

TEST(Eigkrig, HdFailsAtFirstCondition) {
    const Certificate c = certify_eigkrig(gen_hd(10), 1);
    EXPECT_EQ(c.verdict, Verdict::condition_failed);
    const Condition* first = c.first_unmet();
    ASSERT_NE(first, nullptr);
    EXPECT_EQ(first, &c.conditions[1]);
    EXPECT_LE(first->lhs, 5.0 / 11.0 + 1e-8);
    EXPECT_NEAR(first->rhs, 5.0 / 11.0, 1e-15);
}

TEST(Eigkrig, CycleNotApplicable) {
    const Certificate c = certify_eigkrig(gen_cycle(4), 1);
    EXPECT_EQ(c.verdict, Verdict::not_applicable);
    ASSERT_FALSE(c.conditions.empty());
    EXPECT_TRUE(c.conditions[0].precondition);
    EXPECT_EQ(c.conditions[0].status, ConditionStatus::fail);
    EXPECT_THROW(certify_eigkrig(gen_complete(7), 0), PreconditionError);
}

TEST(Eigkrig, SizeGuardAndForce) {
    const Graph big = gen_complete(kTheoremLevelMaxOrder + 1);
    EXPECT_THROW(certify_eigkrig(big, 1), SizeGuardError);
    EXPECT_THROW(certify_redund(big), SizeGuardError);
    // Corollaries need a single eigensolve and are never guarded.
    EXPECT_EQ(certify_corollary(big, 1, Corollary::glob).verdict, Verdict::certified);
}

TEST(Eigkrig, WitnessesPointAtWorstDeletion) {
    const Graph g = gen_complete_minus_2matching(8);
    const Certificate c = certify_eigkrig(g, 1);
    ASSERT_EQ(c.conditions.size(), 4u);
    ASSERT_EQ(c.conditions[2].witness.size(), 1u);
    ASSERT_EQ(c.conditions[3].witness.size(), 2u);
    const auto pair = c.conditions[3].witness;
    const Graph removed = delete_vertices(g, pair).graph;
    EXPECT_NEAR(c.conditions[3].lhs, mu2(removed), 1e-9);
}

TEST(Corollary, Examples) {
    const Certificate glob = certify_corollary(gen_complete(7), 1, Corollary::glob);
    EXPECT_EQ(glob.verdict, Verdict::certified);
    EXPECT_NEAR(glob.conditions.back().rhs, 2.4, 1e-15);
    const Certificate k13 = certify_corollary(gen_complete(13), 2, Corollary::kdisrig);
    EXPECT_EQ(k13.verdict, Verdict::certified);
    EXPECT_NEAR(k13.conditions.back().rhs, 2.0 + 3.0 / 11.0, 1e-15);
    const Certificate h10 = certify_corollary(gen_hd(10), 1, Corollary::maincor);
    EXPECT_EQ(h10.verdict, Verdict::condition_failed);
    EXPECT_LE(h10.conditions.back().lhs, 5.0 / 11.0 + 1e-8);
    EXPECT_THROW(certify_corollary(gen_complete(13), 2, Corollary::glob), PreconditionError);
    EXPECT_THROW(certify_corollary(gen_complete(13), 2, Corollary::maincor), PreconditionError);
    EXPECT_EQ(certify_corollary(gen_complete(7), 2, Corollary::kdisrig).verdict, Verdict::not_applicable);
}

TEST(Redund, Examples) {
    EXPECT_EQ(certify_redund(gen_complete(7)).verdict, Verdict::certified);
    EXPECT_EQ(certify_redund(gen_complete_bipartite(3, 3)).verdict, Verdict::not_applicable);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_random_regular(16, 7, seed);
        if (certify_redund(g).verdict == Verdict::certified) EXPECT_TRUE(is_redundantly_rigid(g));
    }
}

TEST(Ramanujan, Examples) {
    const Certificate p17 = certify_ramanujan_glob(gen_paley(17));
    EXPECT_EQ(p17.verdict, Verdict::certified);
    EXPECT_TRUE(is_globally_rigid(gen_paley(17)));
    EXPECT_EQ(certify_ramanujan_glob(gen_complete(9)).verdict, Verdict::certified);
    EXPECT_EQ(certify_ramanujan_glob(gen_petersen()).verdict, Verdict::not_applicable);
    EXPECT_NE(certify_ramanujan_glob(gen_paley(13)).verdict, Verdict::certified);
    EXPECT_EQ(certify_ramanujan_glob(gen_path(5)).verdict, Verdict::not_applicable);
}

TEST(Dispatch, AllIdsAndUnknown) {
    const Graph k7 = gen_complete(7);
    for (const auto& id : theorem_ids()) {
        const Certificate c = certify(k7, id, 1);
        EXPECT_EQ(c.theorem_id, id);
    }
    EXPECT_EQ(certify(k7, "strcor", 1).implied_property, "rigid");
    EXPECT_EQ(certify(k7, "glob", 1).verdict, Verdict::certified);
    EXPECT_THROW(certify(k7, "nonsense", 1), InputError);
}

TEST(Strings, RoundTrip) {
    for (Verdict v : {Verdict::certified, Verdict::not_applicable, Verdict::condition_failed, Verdict::boundary}) {
        EXPECT_EQ(verdict_from_string(to_string(v)), v);
    }
    for (ConditionStatus s : {ConditionStatus::pass, ConditionStatus::fail, ConditionStatus::boundary}) {
        EXPECT_EQ(condition_status_from_string(to_string(s)), s);
    }
    EXPECT_THROW(verdict_from_string("maybe"), InputError);
}

TEST(Variant, Examples) {
    const VariantReport k7 = eigenvalue_variant_report(gen_complete(7));
    ASSERT_TRUE(k7.applicable);
    EXPECT_NEAR(k7.lambda2, -1.0, 1e-9);
    EXPECT_NEAR(k7.lambda2_bound, 6.0 - 2.0 - 0.4, 1e-12);
    EXPECT_TRUE(k7.lambda2_fires);
    EXPECT_NEAR(k7.q2, 5.0, 1e-9);
    EXPECT_NEAR(k7.q2_bound, 12.0 - 2.0 - 0.4, 1e-12);
    EXPECT_TRUE(k7.q2_fires);
    const VariantReport h10 = eigenvalue_variant_report(gen_hd(10));
    ASSERT_TRUE(h10.applicable);
    EXPECT_FALSE(h10.lambda2_fires);
    EXPECT_FALSE(h10.q2_fires);
    EXPECT_FALSE(eigenvalue_variant_report(gen_cycle(5)).applicable);
}

// The degree-only inequalities that let the corollary conditions imply the three-level ones.
TEST(DegreeInequalities, HoldFromSixK) {
    for (int k = 1; k <= 4; ++k) {
        for (int delta = 6 * k; delta <= 6 * k + 200; ++delta) {
            const double d = delta;
            EXPECT_GT(2.0 + (2.0 * k - 1) / (d - 1), (6.0 * k - 1) / (d + 1)) << k << ' ' << delta;
            EXPECT_GT(1.0 + (2.0 * k - 1) / (d - 1), (4.0 * k - 1) / d) << k << ' ' << delta;
            if (k == 1) {
                EXPECT_GT(2.0 + 2.0 / (d - 1), 6.0 / (d + 1));
                EXPECT_GT(1.0 + 2.0 / (d - 1), 4.0 / d);
            }
        }
    }
}

TEST(DegreeInequalities, CorollaryImpliesThreeLevelOnCorpus) {
    for (const Graph& g : dense_corpus()) {
        for (int k : {1, 2}) {
            if (certify_corollary(g, k, Corollary::kdisrig).verdict == Verdict::certified) {
                EXPECT_EQ(certify_eigkrig(g, k).verdict, Verdict::certified) << format_edge_list(g);
            }
        }
        if (certify_corollary(g, 1, Corollary::glob).verdict == Verdict::certified) {
            EXPECT_EQ(certify_redund(g).verdict, Verdict::certified) << format_edge_list(g);
        }
    }
}

TEST(Soundness, SmallCorpus) {
    for (const Graph& g : dense_corpus()) {
        if (certify_corollary(g, 1, Corollary::maincor).verdict == Verdict::certified) EXPECT_TRUE(is_rigid(g));
        if (certify_corollary(g, 1, Corollary::glob).verdict == Verdict::certified) EXPECT_TRUE(is_globally_rigid(g));
        if (certify_redund(g).verdict == Verdict::certified) EXPECT_TRUE(is_redundantly_rigid(g));
        for (int k : {1, 2}) {
            if (certify_eigkrig(g, k).verdict == Verdict::certified) {
                EXPECT_TRUE(pack_spanning_rigid(g, k).found) << format_edge_list(g);
            }
        }
    }
}

TEST(Monotonicity, AddingEdgesKeepsCertificates) {
    std::mt19937_64 rng(3);
    for (const Graph& base : dense_corpus()) {
        if (base.is_complete()) continue;
        const Certificate before = certify_eigkrig(base, 1);
        const Certificate glob_before = certify_corollary(base, 1, Corollary::glob);
        Graph g = base;
        for (int step = 0; step < 3 && !g.is_complete(); ++step) {
            Edge e;
            do {
                e = Edge(static_cast<Vertex>(rng() % g.order()), static_cast<Vertex>(rng() % g.order()));
            } while (e.u == e.v || g.has_edge(e.u, e.v));
            g = g.with_edge(e);
        }
        if (g.min_degree() < base.min_degree()) continue;
        if (glob_before.verdict == Verdict::certified) {
            EXPECT_EQ(certify_corollary(g, 1, Corollary::glob).verdict, Verdict::certified);
        }
        if (before.verdict == Verdict::certified && g.min_degree() == base.min_degree()) {
            EXPECT_NE(certify_eigkrig(g, 1).verdict, Verdict::condition_failed);
        }
    }
}
