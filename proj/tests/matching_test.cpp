#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sdke/enumerate.hpp"
#include "sdke/families.hpp"
#include "sdke/matching.hpp"
#include "test_support.hpp"

namespace sdke {
namespace {

TEST(MaximumMatching, KnownSizes) {
    EXPECT_EQ(matching_number(complete_graph(2)), 1);
    EXPECT_EQ(matching_number(cycle_graph(5)), 2);
    EXPECT_EQ(matching_number(petersen_graph()), 5);
    EXPECT_TRUE(is_perfect(petersen_graph(), maximum_matching(petersen_graph())));
}

TEST(MaximumMatching, AgreesWithBruteForceExhaustively) {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            EXPECT_EQ(matching_number(g), testing::brute_matching_number(g));
        }
    }
}

TEST(MaximumMatching, AgreesWithBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.15 + 0.07 * static_cast<double>(rng() % 10), rng);
        EXPECT_EQ(matching_number(g), testing::brute_matching_number(g));
    }
}

TEST(MaximumMatching, Deterministic) {
    Graph g = petersen_graph();
    EXPECT_EQ(maximum_matching(g).edges(), maximum_matching(g).edges());
}

TEST(MatchingType, InvolutionInvariant) {
    Graph g = cycle_graph(6);
    Matching m = maximum_matching(g);
    for (int v = 0; v < 6; ++v) {
        EXPECT_EQ(m.mate(m.mate(v)), v);
        EXPECT_EQ(m.saturates(v), m.mate(v) != v);
    }
    EXPECT_THROW(Matching::from_edges(g, {{0, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(Matching::from_edges(g, {{0, 2}}), std::invalid_argument);
}

TEST(EnumerateMaximumMatchings, Counts) {
    Budget b;
    EXPECT_EQ(all_maximum_matchings(cycle_graph(4), b).size(), 2u);
    EXPECT_EQ(all_maximum_matchings(complete_graph(4), b).size(), 3u);
    EXPECT_EQ(all_maximum_matchings(cycle_graph(5), b).size(), 5u);
}

TEST(EnumerateMaximumMatchings, EachOnceAllMaximum) {
    for (const Graph& g : {petersen_graph(), barbell_graph(), complete_bipartite(3, 3)}) {
        Budget b;
        int mu = matching_number(g);
        std::set<EdgeList> seen;
        for_each_maximum_matching(g, b, [&](const Matching& m) {
            EXPECT_EQ(m.size(), mu);
            EXPECT_TRUE(seen.insert(m.edges()).second);
        });
        EXPECT_FALSE(seen.empty());
    }
}

TEST(EnumerateMaximumMatchings, SizeAgreesWithSolverExhaustively) {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            Budget b;
            int best = 0;
            for_each_maximum_matching(g, b, [&](const Matching& m) { best = std::max(best, m.size()); });
            EXPECT_EQ(best, matching_number(g));
        }
    }
}

TEST(EnumerateMaximumMatchings, SymmetricDifferenceOfPerfectMatchingsIsEvenCycles) {
    for (const Graph& g : {cycle_graph(6), complete_graph(4), complete_bipartite(3, 3)}) {
        Budget b;
        auto ms = all_maximum_matchings(g, b);
        for (std::size_t i = 0; i < ms.size(); ++i) {
            for (std::size_t j = i + 1; j < ms.size(); ++j) {
                EdgeList diff;
                std::set_symmetric_difference(ms[i].edges().begin(), ms[i].edges().end(),
                                              ms[j].edges().begin(), ms[j].edges().end(),
                                              std::back_inserter(diff));
                Graph d = Graph::from_edges(g.vertex_count(), diff);
                for (const VertexSet& comp : connected_components(d)) {
                    if (comp.count() == 1) continue;
                    EXPECT_EQ(comp.count() % 2, 0);
                    comp.for_each([&](int v) { EXPECT_EQ(d.degree(v), 2); });
                }
            }
        }
    }
}

TEST(PerfectMatchingPredicates, Examples) {
    Graph k2 = complete_graph(2);
    EXPECT_TRUE(is_perfect(k2, maximum_matching(k2)));
    Graph c3 = cycle_graph(3);
    EXPECT_TRUE(is_near_perfect(c3, maximum_matching(c3)));
    Graph c4 = cycle_graph(4);
    Matching one = Matching::from_edges(c4, {{0, 1}});
    EXPECT_FALSE(is_perfect(c4, one));
    EXPECT_FALSE(is_near_perfect(c4, one));
}

TEST(UniquePerfectMatching, Examples) {
    auto k2 = has_unique_perfect_matching(complete_graph(2));
    EXPECT_TRUE(k2.unique);
    ASSERT_TRUE(k2.matching.has_value());
    EXPECT_EQ(k2.matching->edges(), (EdgeList{{0, 1}}));

    auto c4 = has_unique_perfect_matching(cycle_graph(4));
    EXPECT_FALSE(c4.unique);
    EXPECT_TRUE(c4.matching.has_value());

    auto barbell = has_unique_perfect_matching(barbell_graph());
    EXPECT_TRUE(barbell.unique);
    EXPECT_EQ(barbell.matching->edges(), (EdgeList{{0, 1}, {2, 3}, {4, 5}}));

    EXPECT_FALSE(has_unique_perfect_matching(cycle_graph(5)).matching.has_value());
}

TEST(UniquePerfectMatching, AgreesWithEnumerationExhaustively) {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : all_graphs(n)) {
            Budget b;
            int perfect = 0;
            for_each_maximum_matching(g, b, [&](const Matching& m) {
                if (is_perfect(g, m)) ++perfect;
            });
            auto res = has_unique_perfect_matching(g);
            EXPECT_EQ(res.matching.has_value(), perfect >= 1);
            EXPECT_EQ(res.unique, perfect == 1);
        }
    }
}

TEST(AlternatingReach, SpecExamples) {
    Graph k2 = complete_graph(2);
    Matching m = Matching::from_edges(k2, {{0, 1}});
    auto states = alternating_reach(k2, m, 0, EdgeKind::matched);
    ASSERT_EQ(states.size(), 1u);
    EXPECT_EQ(states[0], (WalkState{1, EdgeKind::matched}));

    Graph c3 = cycle_graph(3);
    Matching m3 = Matching::from_edges(c3, {{0, 1}});
    auto reach = alternating_reach(c3, m3, 2, EdgeKind::unmatched);
    std::vector<WalkState> expected{{0, EdgeKind::matched},
                                    {0, EdgeKind::unmatched},
                                    {1, EdgeKind::matched},
                                    {1, EdgeKind::unmatched},
                                    {2, EdgeKind::unmatched}};
    EXPECT_EQ(reach, expected);

    Graph lonely = Graph::from_edges(1, {});
    Matching none = Matching::empty(lonely);
    EXPECT_TRUE(alternating_reach(lonely, none, 0, EdgeKind::matched).empty());
    EXPECT_TRUE(alternating_reach(lonely, none, 0, EdgeKind::unmatched).empty());
}

TEST(AlternatingReach, MatchedStartNonemptyIffSaturated) {
    Graph g = barbell_graph();
    Budget b;
    for (const Matching& m : all_maximum_matchings(g, b)) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool nonempty = !alternating_reach(g, m, v, EdgeKind::matched).empty();
            EXPECT_EQ(nonempty, m.saturates(v));
        }
    }
}

TEST(FactorCritical, Examples) {
    EXPECT_TRUE(is_factor_critical(cycle_graph(3)));
    EXPECT_TRUE(is_factor_critical(cycle_graph(5)));
    EXPECT_FALSE(is_factor_critical(complete_graph(2)));
    EXPECT_FALSE(is_factor_critical(path_graph(3)));
    EXPECT_TRUE(is_factor_critical(complete_graph(7)));
}

TEST(FactorCritical, ImpliesOddAndConnected) {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            if (is_factor_critical(g)) {
                EXPECT_EQ(n % 2, 1);
                EXPECT_TRUE(is_connected(g));
            }
        }
    }
}

}  // namespace
}  // namespace sdke
