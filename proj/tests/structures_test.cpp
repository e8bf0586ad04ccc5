#include <gtest/gtest.h>

#include <set>

#include "sdke/enumerate.hpp"
#include "sdke/families.hpp"
#include "sdke/independent.hpp"
#include "sdke/parse.hpp"
#include "sdke/structures.hpp"
#include "test_support.hpp"

namespace sdke {
namespace {

Matching match_of(const Graph& g, EdgeList edges) { return Matching::from_edges(g, std::move(edges)); }

TEST(FindBlossoms, Triangle) {
    Graph c3 = cycle_graph(3);
    Budget b;
    auto blossoms = find_blossoms(c3, match_of(c3, {{0, 1}}), b);
    ASSERT_EQ(blossoms.size(), 1u);
    EXPECT_EQ(blossoms[0].cycle, (std::vector<int>{2, 0, 1}));
    EXPECT_EQ(blossoms[0].base(), 2);
}

TEST(FindBlossoms, EvenCycleHasNone) {
    Graph c4 = cycle_graph(4);
    Budget b;
    EXPECT_TRUE(find_blossoms(c4, match_of(c4, {{0, 1}, {2, 3}}), b).empty());
}

TEST(FindBlossoms, K4HasOnePerTriangle) {
    Graph k4 = complete_graph(4);
    Budget b;
    auto blossoms = find_blossoms(k4, match_of(k4, {{0, 1}, {2, 3}}), b);
    std::set<std::vector<int>> got;
    for (const auto& bl : blossoms) got.insert(bl.cycle);
    std::set<std::vector<int>> expected{{2, 0, 1}, {3, 0, 1}, {0, 2, 3}, {1, 2, 3}};
    EXPECT_EQ(got, expected);
}

TEST(FindBlossoms, OddCycleWholeGraph) {
    Graph c5 = cycle_graph(5);
    Budget b;
    auto blossoms = find_blossoms(c5, match_of(c5, {{0, 1}, {2, 3}}), b);
    ASSERT_EQ(blossoms.size(), 1u);
    EXPECT_EQ(blossoms[0].cycle, (std::vector<int>{4, 0, 1, 2, 3}));
}

TEST(FindBlossoms, AllEnumeratedBlossomsAreValid) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(7, 0.45, rng);
        Budget b;
        Matching m = maximum_matching(g);
        std::set<std::vector<int>> seen;
        for (const Blossom& bl : find_blossoms(g, m, b)) {
            EXPECT_TRUE(detail::verify_blossom(g, m, bl));
            EXPECT_TRUE(seen.insert(bl.cycle).second) << "duplicate blossom";
        }
    }
}

TEST(FindBlossoms, BudgetFailsLoudly) {
    Graph k12 = complete_graph(12);
    Budget tiny(100);
    EXPECT_THROW(find_blossoms(k12, maximum_matching(k12), tiny), budget_exceeded);
}

TEST(JStructures, TriangleIsItsOwnFlower) {
    Graph c3 = cycle_graph(3);
    Budget b;
    auto sets = j_structure_vertices(c3, match_of(c3, {{0, 1}}), b);
    EXPECT_EQ(sets.flower, VertexSet::of(3, {0, 1, 2}));
    EXPECT_TRUE(sets.posy.empty());
}

TEST(JStructures, K2HasNothing) {
    Graph k2 = complete_graph(2);
    Budget b;
    auto sets = j_structure_vertices(k2, match_of(k2, {{0, 1}}), b);
    EXPECT_TRUE(sets.flower.empty());
    EXPECT_TRUE(sets.posy.empty());
}

TEST(JStructures, BarbellIsAllPosy) {
    Graph g = barbell_graph();
    Budget b;
    auto sets = j_structure_vertices(g, maximum_matching(g), b);
    EXPECT_TRUE(sets.flower.empty());
    EXPECT_EQ(sets.posy, VertexSet::full(6));
}

TEST(JStructures, TrianglePlusTailStemIsDetected) {
    // triangle 0,1,2 with path 2-3-4; matching {01, 23} leaves 4 unsaturated
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    Budget b;
    auto sets = j_structure_vertices(g, match_of(g, {{0, 1}, {2, 3}}), b);
    EXPECT_EQ(sets.flower, VertexSet::full(5));
    EXPECT_TRUE(sets.posy.empty());
}

TEST(TStructures, SpecExamples) {
    Budget b;
    Graph c3 = cycle_graph(3);
    auto tri = t_structure_vertices(c3, match_of(c3, {{0, 1}}), b);
    EXPECT_EQ(tri.flower, VertexSet::full(3));

    Graph barbell = barbell_graph();
    auto bb = t_structure_vertices(barbell, maximum_matching(barbell), b);
    EXPECT_EQ(bb.posy, VertexSet::full(6));
    EXPECT_TRUE(bb.flower.empty());

    Graph c4 = cycle_graph(4);
    auto quad = t_structure_vertices(c4, match_of(c4, {{0, 1}, {2, 3}}), b);
    EXPECT_TRUE(quad.flower.empty());
    EXPECT_TRUE(quad.posy.empty());
}

TEST(SdOracle, SpecExamples) {
    Budget b;
    EXPECT_TRUE(sd_oracle(complete_graph(2), b).empty());
    EXPECT_EQ(sd_oracle(cycle_graph(3), b), VertexSet::full(3));
    EXPECT_TRUE(sd_oracle(path_graph(4), b).empty());
}

TEST(SdOracle, VariantsAgreeOnAllSmallConnectedGraphs) {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            Budget b;
            EXPECT_EQ(sd_oracle(g, StructureVariant::T, b), sd_oracle(g, StructureVariant::J, b))
                << to_edge_list(g);
        }
    }
}

TEST(SdOracle, RejectsSVariant) {
    Budget b;
    EXPECT_THROW(sd_oracle(cycle_graph(3), StructureVariant::S, b), std::invalid_argument);
}

TEST(PosyFlowerSets, SpecExamples) {
    Budget b;
    auto barbell = posy_flower_sets(barbell_graph(), b);
    EXPECT_EQ(barbell.posy, VertexSet::full(6));
    EXPECT_TRUE(barbell.flower.empty());

    auto tri = posy_flower_sets(cycle_graph(3), b);
    EXPECT_EQ(tri.flower, VertexSet::full(3));

    auto quad = posy_flower_sets(cycle_graph(4), b);
    EXPECT_TRUE(quad.posy.empty());
    EXPECT_TRUE(quad.flower.empty());
}

TEST(NonKeCharacterization, SmallConnectedGraphs) {
    // non-KE <=> every maximum matching has a Tflower or Sposy
    //        <=> some maximum matching has a Tflower or Tposy
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            Budget b;
            bool non_ke =
                independence_number(g, b) + matching_number(g) != g.vertex_count();
            bool all_matchings = true;
            bool some_matching = false;
            for_each_maximum_matching(g, b, [&](const Matching& m) {
                if (!has_t_flower_or_s_posy(g, m, b)) all_matchings = false;
                if (has_t_flower_or_t_posy(g, m, b)) some_matching = true;
            });
            EXPECT_EQ(non_ke, all_matchings) << to_edge_list(g);
            EXPECT_EQ(non_ke, some_matching) << to_edge_list(g);
        }
    }
}

TEST(VerifyCertificate, TriangleFlower) {
    Graph c3 = cycle_graph(3);
    Matching m = match_of(c3, {{0, 1}});
    Certificate good{FlowerCertificate{Blossom{{2, 0, 1}}, {2}, 2, StructureVariant::T}, m};
    EXPECT_TRUE(verify_certificate(c3, good));
    // base moved onto a saturated cycle vertex
    Certificate bad{FlowerCertificate{Blossom{{0, 1, 2}}, {0}, 0, StructureVariant::T}, m};
    EXPECT_FALSE(verify_certificate(c3, bad));
}

TEST(VerifyCertificate, BarbellPosy) {
    Graph g = barbell_graph();
    Matching m = maximum_matching(g);
    Certificate cert{
        PosyCertificate{Blossom{{2, 0, 1}}, Blossom{{3, 4, 5}}, {2, 3}, StructureVariant::T}, m};
    EXPECT_TRUE(verify_certificate(g, cert));
    // breaking one alternation: connector of even length
    Certificate broken{
        PosyCertificate{Blossom{{2, 0, 1}}, Blossom{{3, 4, 5}}, {2, 3, 4}, StructureVariant::T}, m};
    EXPECT_FALSE(verify_certificate(g, broken));
    // non-maximum stored matching
    Certificate small{
        PosyCertificate{Blossom{{2, 0, 1}}, Blossom{{3, 4, 5}}, {2, 3}, StructureVariant::T},
        match_of(g, {{0, 1}})};
    EXPECT_FALSE(verify_certificate(g, small));
}

TEST(FindCertificate, SpecExamples) {
    Budget b;
    Graph c3 = cycle_graph(3);
    auto cert = find_certificate(c3, 2, b);
    ASSERT_TRUE(cert.has_value());
    ASSERT_TRUE(std::holds_alternative<FlowerCertificate>(cert->witness));
    EXPECT_EQ(std::get<FlowerCertificate>(cert->witness).blossom.base(), 2);
    EXPECT_TRUE(verify_certificate(c3, *cert));

    Graph k2 = complete_graph(2);
    EXPECT_FALSE(find_certificate(k2, 0, b).has_value());

    Graph barbell = barbell_graph();
    auto posy = find_certificate(barbell, 0, b);
    ASSERT_TRUE(posy.has_value());
    EXPECT_TRUE(std::holds_alternative<PosyCertificate>(posy->witness));
    EXPECT_TRUE(verify_certificate(barbell, *posy));
}

TEST(FindCertificate, CoversExactlyTheOracleSet) {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            Budget b;
            VertexSet sd = sd_oracle(g, StructureVariant::J, b);
            for (int v = 0; v < n; ++v) {
                auto cert = find_certificate(g, v, b);
                EXPECT_EQ(cert.has_value(), sd.test(v)) << to_edge_list(g) << " v=" << v;
                if (cert) {
                    EXPECT_TRUE(verify_certificate(g, *cert)) << to_edge_list(g) << " v=" << v;
                }
            }
        }
    }
}

TEST(JStructures, PerfectMatchingGraphsHaveNoFlowers) {
    for (int n = 2; n <= 6; n += 2) {
        for (const Graph& g : all_graphs(n)) {
            if (2 * matching_number(g) != n) continue;
            Budget b;
            for_each_maximum_matching(g, b, [&](const Matching& m) {
                auto sets = j_structure_vertices(g, m, b);
                EXPECT_TRUE(sets.flower.empty());
            });
        }
    }
}

}  // namespace
}  // namespace sdke
