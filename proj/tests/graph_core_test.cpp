#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "sdke/families.hpp"
#include "sdke/graph.hpp"
#include "sdke/independent.hpp"
#include "sdke/parse.hpp"
#include "test_support.hpp"

namespace sdke {
namespace {

TEST(ParseGraph, EdgeListTriangle) {
    Graph g = parse_edge_list("3\n0 1\n1 2\n2 0");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(ParseGraph, EdgeListK2AndComments) {
    Graph g = parse_edge_list("# tiny\n2\n0 1  # the only edge\n");
    EXPECT_EQ(g.vertex_count(), 2);
    EXPECT_EQ(g.edge_count(), 1);
}

TEST(ParseGraph, RejectsSelfLoop) {
    EXPECT_THROW(parse_edge_list("3\n0 0"), parse_error);
}

TEST(ParseGraph, RejectsDuplicateEdge) {
    EXPECT_THROW(parse_edge_list("3\n0 1\n1 0"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 1\n0 1"), parse_error);
}

TEST(ParseGraph, RejectsOutOfRangeAndMalformed) {
    EXPECT_THROW(parse_edge_list("3\n0 7"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0"), parse_error);
    EXPECT_THROW(parse_edge_list(""), parse_error);
}

TEST(ParseGraph, Graph6KnownStrings) {
    Graph k2 = parse_graph6("A_");
    EXPECT_EQ(k2.vertex_count(), 2);
    EXPECT_TRUE(k2.has_edge(0, 1));
    Graph p3 = parse_graph6("Bg");  // edges 01, 12
    EXPECT_EQ(p3.vertex_count(), 3);
    EXPECT_TRUE(p3.has_edge(0, 1));
    EXPECT_FALSE(p3.has_edge(0, 2));
    EXPECT_TRUE(p3.has_edge(1, 2));
    Graph c3 = parse_graph6("Bw");
    EXPECT_EQ(c3.edge_count(), 3);
}

TEST(ParseGraph, Graph6RoundTrip) {
    for (const Graph& g : {petersen_graph(), barbell_graph(), path_graph(7), empty_graph(4)}) {
        Graph back = parse_graph6(to_graph6(g));
        EXPECT_EQ(back, g);
    }
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
}

TEST(Neighborhood, Basics) {
    Graph c3 = cycle_graph(3);
    EXPECT_EQ(neighborhood(c3, VertexSet::of(3, {0})), VertexSet::of(3, {1, 2}));
    EXPECT_EQ(neighborhood(c3, VertexSet(3)), VertexSet(3));
    Graph c4 = cycle_graph(4);
    EXPECT_EQ(neighborhood(c4, VertexSet::of(4, {0, 2})), VertexSet::of(4, {1, 3}));
}

TEST(Boundary, Basics) {
    Graph k2 = complete_graph(2);
    EXPECT_EQ(boundary(k2, VertexSet::of(2, {0})), (EdgeList{{0, 1}}));
    EXPECT_TRUE(boundary(k2, VertexSet::full(2)).empty());
    Graph c4 = cycle_graph(4);
    EXPECT_EQ(boundary(c4, VertexSet::of(4, {0, 1})), (EdgeList{{0, 3}, {1, 2}}));
}

TEST(Boundary, SymmetricInComplement) {
    Graph g = petersen_graph();
    for (std::uint32_t mask = 0; mask < (1u << 10); mask += 37) {
        VertexSet s(10);
        for (int v = 0; v < 10; ++v) {
            if (mask >> v & 1) s.set(v);
        }
        EXPECT_EQ(boundary(g, s).size(), boundary(g, s.complement()).size());
    }
}

TEST(Components, Counts) {
    Graph k2 = complete_graph(2);
    EXPECT_EQ(isolated_count(k2), 0);
    EXPECT_EQ(isolated_count(empty_graph(3)), 3);
    // K2 plus an isolated vertex
    Graph g = Graph::from_edges(3, {{0, 1}});
    EXPECT_EQ(isolated_count(g), 1);
    EXPECT_EQ(odd_component_count(cycle_graph(3)), 1);
    EXPECT_EQ(odd_component_count(complete_graph(2)), 0);
    // C3 + K2 + isolated vertex
    Graph mixed = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    EXPECT_EQ(odd_component_count(mixed), 2);
    EXPECT_EQ(connected_components(mixed).size(), 3u);
}

TEST(IndependentSets, EnumerationMatchesExamples) {
    Budget b;
    EXPECT_EQ(all_independent_sets(complete_graph(2), b).size(), 3u);
    EXPECT_EQ(all_independent_sets(cycle_graph(3), b).size(), 4u);
    EXPECT_EQ(all_independent_sets(cycle_graph(4), b).size(), 7u);
}

TEST(IndependentSets, CountAgreesWithDeletionRecursion) {
    for (int n = 1; n <= 8; ++n) {
        Graph g = Graph::from_edges(n, {});
        // a deterministic non-trivial test graph: path + one chord per stride
        EdgeList edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        if (n >= 4) edges.emplace_back(0, n - 1);
        if (n >= 6) edges.emplace_back(1, 4);
        g = Graph::from_edges(n, edges);
        Budget b;
        EXPECT_EQ(static_cast<long long>(all_independent_sets(g, b).size()),
                  testing::independent_set_count_recursive(g))
            << "n=" << n;
    }
}

TEST(IndependentSets, SetsAreIndependentAndUnique) {
    Graph g = petersen_graph();
    Budget b;
    auto sets = all_independent_sets(g, b);
    std::set<std::vector<int>> unique;
    for (const VertexSet& s : sets) {
        for (const Edge& e : g.edges()) {
            EXPECT_FALSE(s.test(e.u) && s.test(e.v));
        }
        unique.insert(s.to_vector());
    }
    EXPECT_EQ(unique.size(), sets.size());
}

TEST(IndependenceNumber, KnownValues) {
    Budget b;
    EXPECT_EQ(independence_number(cycle_graph(5), b), 2);
    EXPECT_EQ(independence_number(complete_graph(4), b), 1);
    EXPECT_EQ(independence_number(petersen_graph(), b), 4);
}

TEST(IndependenceNumber, MatchesEnumerationOnSmallGraphs) {
    for (const Graph& g : {cycle_graph(6), path_graph(7), complete_bipartite(3, 4), barbell_graph()}) {
        Budget b;
        int alpha = independence_number(g, b);
        int best = 0;
        for_each_independent_set(g, b, [&](const VertexSet& s) { best = std::max(best, s.count()); });
        EXPECT_EQ(alpha, best);
    }
}

TEST(IndependenceNumber, OmegaExposesArgmaxSets) {
    Budget b;
    auto omega = maximum_independent_sets(cycle_graph(4), b);
    ASSERT_EQ(omega.size(), 2u);
    EXPECT_EQ(omega[0], VertexSet::of(4, {0, 2}));
    EXPECT_EQ(omega[1], VertexSet::of(4, {1, 3}));
}

TEST(IndependentSets, BudgetFailsLoudly) {
    Budget tiny(50);
    EXPECT_THROW(all_independent_sets(complete_bipartite(8, 8), tiny), budget_exceeded);
}

TEST(InducedSubgraph, Basics) {
    Graph c4 = cycle_graph(4);
    auto [p3, map] = induced_subgraph(c4, VertexSet::of(4, {0, 1, 2}));
    EXPECT_EQ(p3.vertex_count(), 3);
    EXPECT_EQ(p3.edge_count(), 2);
    EXPECT_EQ(map, (std::vector<int>{0, 1, 2}));
    auto [same, id_map] = induced_subgraph(c4, VertexSet::full(4));
    EXPECT_EQ(same, c4);
    // triangle with a pendant, restricted to the triangle
    Graph tp = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto [tri, tmap] = induced_subgraph(tp, VertexSet::of(4, {0, 1, 2}));
    EXPECT_EQ(tri, cycle_graph(3));
}

TEST(DeleteOps, VertexAndEdge) {
    Graph c4 = cycle_graph(4);
    auto [g, map] = delete_vertex(c4, 0);
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2);
    Graph h = delete_edge(c4, 0, 1);
    EXPECT_EQ(h.edge_count(), 3);
    EXPECT_THROW(delete_edge(c4, 0, 2), std::invalid_argument);
    EXPECT_EQ(min_degree(c4), 2);
    EXPECT_EQ(min_degree(path_graph(3)), 1);
}

}  // namespace
}  // namespace sdke
