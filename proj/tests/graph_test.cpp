#include <gtest/gtest.h>

#include "listhom/instance_gen.hpp"
#include "support/validators.hpp"

using namespace listhom;

namespace {

Graph path(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST(BuildGraph, CollapsesDuplicates)
{
    auto g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, LoopMakesVertexSelfAdjacent)
{
    auto g = build_graph(1, {{0, 0}});
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_TRUE(g.has_loop(0));
    EXPECT_EQ(g.loop_count(), 1U);
    ASSERT_EQ(g.neighbours(0).size(), 1U);
    EXPECT_EQ(g.neighbours(0)[0], 0U);
}

TEST(BuildGraph, RejectsOutOfRangeEndpoint)
{
    EXPECT_THROW(build_graph(2, {{0, 5}}), InvalidInput);
}

TEST(ConnectedComponents, Examples)
{
    EXPECT_EQ(connected_components(path(3)), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
    EXPECT_EQ(connected_components(Graph(3)), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
    EXPECT_EQ(connected_components(build_graph(4, {{0, 1}, {2, 3}})),
        (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
}

TEST(ConnectedComponents, LoopsDoNotConnect)
{
    auto g = build_graph(2, {{0, 0}, {1, 1}});
    EXPECT_EQ(connected_components(g).size(), 2U);
}

TEST(BfsLayers, PathAndCycle)
{
    auto p = bfs_layers(path(3), 0);
    EXPECT_EQ(p.layers, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
    EXPECT_EQ(p.eccentricity(), 2U);

    auto c = bfs_layers(cycle_graph(5), 0);
    EXPECT_EQ(c.layers, (std::vector<std::vector<Vertex>>{{0}, {1, 4}, {2, 3}}));
}

TEST(BfsLayers, IgnoresLoops)
{
    auto g = with_loops(path(3), std::vector<Vertex>{0, 1});
    EXPECT_EQ(bfs_layers(g, 0).layers, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
}

TEST(BfsLayers, DisconnectedIsAnError)
{
    EXPECT_THROW(bfs_layers(build_graph(4, {{0, 1}, {2, 3}}), 0), NotConnected);
    EXPECT_THROW(bfs_layers(path(3), 7), InvalidInput);
}

TEST(InducedSubgraph, Examples)
{
    auto triangle = complete_graph(3);
    auto e = induced_subgraph(triangle, std::vector<Vertex>{0, 1});
    EXPECT_EQ(e.graph.edges(), (std::vector<Edge>{{0, 1}}));

    auto empty = induced_subgraph(triangle, std::vector<Vertex>{});
    EXPECT_EQ(empty.graph.vertex_count(), 0U);

    auto looped = build_graph(3, {{0, 1}, {2, 2}});
    auto one = induced_subgraph(looped, std::vector<Vertex>{2});
    EXPECT_EQ(one.graph.vertex_count(), 1U);
    EXPECT_TRUE(one.graph.has_loop(0));
    EXPECT_EQ(one.to_parent, std::vector<Vertex>{2});
    EXPECT_EQ(one.from_parent[2], 0U);
    EXPECT_EQ(one.from_parent[0], no_vertex);
}

TEST(InducedSubgraph, RejectsRepeatedVertex)
{
    EXPECT_THROW(induced_subgraph(path(3), std::vector<Vertex>{1, 1}), InvalidInput);
}

TEST(IsHomomorphism, Examples)
{
    auto k2 = complete_graph(2);
    EXPECT_TRUE(is_homomorphism(cycle_graph(4), k2, Homomorphism{0, 1, 0, 1}));
    for (Colour a = 0; a < 2; ++a)
        for (Colour b = 0; b < 2; ++b)
            for (Colour c = 0; c < 2; ++c)
                EXPECT_FALSE(is_homomorphism(cycle_graph(3), k2, Homomorphism{a, b, c}));

    auto loop = build_graph(1, {{0, 0}});
    EXPECT_FALSE(is_homomorphism(loop, Graph(1), Homomorphism{0}));
    EXPECT_TRUE(is_homomorphism(loop, loop, Homomorphism{0}));
}

TEST(IsHomomorphism, RejectsWrongShape)
{
    EXPECT_FALSE(is_homomorphism(path(2), complete_graph(2), Homomorphism{0}));
    EXPECT_FALSE(is_homomorphism(path(2), complete_graph(2), Homomorphism{0, 2}));
}

TEST(ObeysLists, PointwiseMembership)
{
    ListMapping lists(std::vector<ColourSet>{ColourSet::of({0}), ColourSet::of({1, 2})});
    EXPECT_TRUE(obeys_lists(Homomorphism{0, 2}, lists));
    EXPECT_FALSE(obeys_lists(Homomorphism{1, 2}, lists));
}

TEST(ColourSetTest, IteratesInOrder)
{
    auto s = ColourSet::of({5, 0, 63});
    std::vector<Colour> got(s.begin(), s.end());
    EXPECT_EQ(got, (std::vector<Colour>{0, 5, 63}));
    EXPECT_EQ(s.size(), 3U);
    EXPECT_THROW(ColourSet::of({64}), InvalidInput);
    EXPECT_EQ(ColourSet::first(64).size(), 64U);
}
