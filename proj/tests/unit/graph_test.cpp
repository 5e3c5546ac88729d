#include "msok/builders.hpp"
#include "msok/graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace msok;

TEST(Graph, EdgesAreSymmetric)
{
    Graph g(4);
    g.add_edge(0, 2);
    EXPECT_TRUE(g.adjacent(2, 0));
    EXPECT_EQ(g.edge_count(), 1U);
    g.add_edge(2, 0);
    EXPECT_EQ(g.edge_count(), 1U);
    g.remove_edge(0, 2);
    EXPECT_EQ(g.edge_count(), 0U);
}

TEST(Graph, RejectsSelfLoopsAndBadVertices)
{
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
}

TEST(Graph, LabelsDefaultToOneBasedIndex)
{
    Graph g(3);
    EXPECT_EQ(g.label(0), "1");
    g.set_labels({"a", "b", "c"});
    EXPECT_EQ(g.label(2), "c");
    EXPECT_THROW(g.set_labels({"a", "a", "b"}), std::invalid_argument);
    EXPECT_THROW(g.set_labels({"a"}), std::invalid_argument);
}

TEST(Graph, EqualityIgnoresLabels)
{
    Graph a = builders::path(3);
    Graph b = builders::path(3);
    b.set_labels({"x", "y", "z"});
    EXPECT_EQ(a, b);
}

TEST(Graph, InducedSubgraphKeepsOrderAndLabels)
{
    Graph g = builders::cycle(5);
    g.set_labels({"a", "b", "c", "d", "e"});
    const auto sub = induced_subgraph(g, VertexSet(5, {0, 1, 3}));
    EXPECT_EQ(sub.graph.order(), 3U);
    EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1, 3}));
    EXPECT_TRUE(sub.graph.adjacent(0, 1));
    EXPECT_FALSE(sub.graph.adjacent(1, 2));
    EXPECT_EQ(sub.graph.label(2), "d");
    EXPECT_THROW(induced_subgraph(g, VertexSet(5)), std::invalid_argument);
}

TEST(Graph, CutRankExamples)
{
    // Complete graph: every proper cut has rank 1.
    EXPECT_EQ(cut_rank(builders::complete(5), VertexSet(5, {0, 1})), 1);
    // Perfect matching across the cut has full rank.
    Graph m(6);
    m.add_edge(0, 3);
    m.add_edge(1, 4);
    m.add_edge(2, 5);
    EXPECT_EQ(cut_rank(m, VertexSet(6, {0, 1, 2})), 3);
    EXPECT_EQ(cut_rank(m, VertexSet(6)), 0);
    EXPECT_EQ(cut_rank(m, VertexSet::full(6)), 0);
}

TEST(Graph, CutRankMatchesOracleBeyondOneWord)
{
    std::mt19937_64 rng(11);
    const Graph g = oracle::random_graph(70, 0.3, rng);
    for (int t = 0; t < 5; ++t) {
        VertexSet u(70);
        for (Vertex v = 0; v < 70; ++v) {
            if (rng() % 2 == 0) {
                u.insert(v);
            }
        }
        EXPECT_EQ(cut_rank(g, u), oracle::cut_rank(g, u));
    }
}

TEST(Graph, ModuleChecks)
{
    const Graph g = builders::complete_bipartite(2, 3);
    EXPECT_TRUE(is_module(g, VertexSet(5, {0, 1})));
    EXPECT_TRUE(is_module(g, VertexSet(5, {2, 3, 4})));
    EXPECT_FALSE(is_module(g, VertexSet(5, {0, 2})));
    EXPECT_TRUE(is_module(g, VertexSet(5, {3})));
    EXPECT_THROW(is_module(g, VertexSet(5)), std::invalid_argument);
    EXPECT_TRUE(modules_adjacent(g, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})));
    EXPECT_FALSE(modules_adjacent(g, VertexSet(5, {0}), VertexSet(5, {1})));
    EXPECT_THROW(modules_adjacent(g, VertexSet(5, {0, 1}), VertexSet(5, {1, 2})), std::invalid_argument);
    EXPECT_THROW(modules_adjacent(g, VertexSet(5, {0, 2}), VertexSet(5, {3})), std::invalid_argument);
}

TEST(Builders, BlowUpMakesModules)
{
    const Graph base = builders::path(3);
    const std::vector<Graph> blobs{builders::complete(2), builders::edgeless(3), Graph(1)};
    const Graph g = builders::blow_up(base, blobs);
    EXPECT_EQ(g.order(), 6U);
    EXPECT_TRUE(is_module(g, VertexSet(6, {0, 1})));
    EXPECT_TRUE(is_module(g, VertexSet(6, {2, 3, 4})));
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_FALSE(g.adjacent(2, 3));
    EXPECT_TRUE(g.adjacent(1, 4));
    EXPECT_FALSE(g.adjacent(0, 5));
    EXPECT_TRUE(g.adjacent(3, 5));
}

TEST(Builders, Shapes)
{
    EXPECT_EQ(builders::complete(5).edge_count(), 10U);
    EXPECT_EQ(builders::cycle(6).edge_count(), 6U);
    EXPECT_EQ(builders::path(1).edge_count(), 0U);
    EXPECT_EQ(builders::complete_bipartite(3, 4).edge_count(), 12U);
    EXPECT_EQ(builders::disjoint_union(builders::complete(3), builders::path(2)).edge_count(), 4U);
    EXPECT_THROW(builders::cycle(2), std::invalid_argument);
}

TEST(Graph, SmallInducedSubgraphs)
{
    EXPECT_EQ(induced_subgraph(builders::complete(3), VertexSet(3, {0, 1})).graph, builders::complete(2));
    EXPECT_EQ(induced_subgraph(builders::cycle(4), VertexSet(4, {0, 2})).graph, builders::edgeless(2));
    EXPECT_EQ(induced_subgraph(builders::path(4), VertexSet(4, {0, 1, 2})).graph, builders::path(3));
}

TEST(Graph, SmallCutRanks)
{
    EXPECT_EQ(cut_rank(builders::complete(3), VertexSet(3, {0})), 1);
    EXPECT_EQ(cut_rank(builders::edgeless(4), VertexSet(4, {0, 1})), 0);
    EXPECT_EQ(cut_rank(builders::cycle(4), VertexSet(4, {0, 2})), 1);
}

TEST(Graph, SmallModules)
{
    EXPECT_TRUE(is_module(builders::complete(3), VertexSet(3, {0, 1})));
    EXPECT_FALSE(is_module(builders::path(4), VertexSet(4, {1, 2})));
    EXPECT_TRUE(is_module(builders::path(4), VertexSet::full(4)));
    EXPECT_TRUE(modules_adjacent(builders::complete(3), VertexSet(3, {0}), VertexSet(3, {1, 2})));
    EXPECT_FALSE(modules_adjacent(builders::edgeless(4), VertexSet(4, {0, 1}), VertexSet(4, {2})));
    EXPECT_TRUE(modules_adjacent(builders::cycle(4), VertexSet(4, {0, 2}), VertexSet(4, {1, 3})));
}

TEST(Graph, SingletonsAndWholeAreModules)
{
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        const Graph g = oracle::random_graph(1 + rng() % 9, 0.5, rng);
        EXPECT_TRUE(is_module(g, g.vertices()));
        for (Vertex v = 0; v < g.order(); ++v) {
            EXPECT_TRUE(is_module(g, VertexSet(g.order(), {v})));
        }
    }
}

TEST(Graph, InducedSubgraphPreservesAdjacency)
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const Graph g = oracle::random_graph(2 + rng() % 12, 0.5, rng);
        VertexSet s(g.order(), {0});
        for (Vertex v = 1; v < g.order(); ++v) {
            if (rng() % 2 == 0) {
                s.insert(v);
            }
        }
        const auto sub = induced_subgraph(g, s);
        for (Vertex a = 0; a < sub.graph.order(); ++a) {
            for (Vertex b = 0; b < sub.graph.order(); ++b) {
                if (a != b) {
                    EXPECT_EQ(sub.graph.adjacent(a, b), g.adjacent(sub.to_parent[a], sub.to_parent[b]));
                }
            }
        }
    }
}
