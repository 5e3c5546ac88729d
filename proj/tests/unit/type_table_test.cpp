#include "msok/builders.hpp"
#include "msok/enumerate.hpp"
#include "msok/errors.hpp"
#include "msok/game.hpp"
#include "msok/type_table.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace msok;

TEST(TypeTable, SameGraphSameId)
{
    TypeTable table;
    const TypeId a = table.type_of(builders::cycle(5), {}, 2);
    const std::size_t size = table.size();
    EXPECT_EQ(table.type_of(builders::cycle(5), {}, 2), a);
    EXPECT_EQ(table.size(), size);
    EXPECT_NE(table.type_of(builders::complete(3), {}, 2), table.type_of(builders::edgeless(3), {}, 2));
    EXPECT_EQ(table.type_of(builders::complete(3), {}, 1), table.type_of(builders::edgeless(3), {}, 1));
}

TEST(TypeTable, IdsDependOnRank)
{
    TypeTable table;
    EXPECT_NE(table.type_of(Graph(1), {}, 1), table.type_of(Graph(1), {}, 2));
}

TEST(TypeTable, RejectsBadInput)
{
    TypeTable table;
    EXPECT_THROW(table.type_of(Graph(2), {}, -1), std::invalid_argument);
    const std::vector<VertexSet> wrong{VertexSet(3)};
    EXPECT_THROW(table.type_of(Graph(2), wrong, 1), std::invalid_argument);
    EXPECT_THROW(table.type_of(builders::path(9), {}, 1), CapExceeded);
    EXPECT_THROW(table.type_of(Graph(2), {}, 4), CapExceeded);
}

TEST(TypeTable, InvariantUnderRelabeling)
{
    std::mt19937_64 rng(61);
    TypeTable table;
    for (int t = 0; t < 30; ++t) {
        const Graph g = oracle::random_graph(1 + rng() % 6, 0.5, rng);
        std::vector<Vertex> perm(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            perm[v] = v;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(g.order());
        for (auto [u, v] : g.edges()) {
            h.add_edge(perm[u], perm[v]);
        }
        VertexSet s(g.order());
        VertexSet ps(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            if (rng() % 2 == 0) {
                s.insert(v);
                ps.insert(perm[v]);
            }
        }
        for (int q = 0; q <= 2; ++q) {
            EXPECT_EQ(table.type_of(g, {}, q), table.type_of(h, {}, q));
            EXPECT_EQ(table.type_of(g, std::span<const VertexSet>(&s, 1), q),
                      table.type_of(h, std::span<const VertexSet>(&ps, 1), q));
        }
    }
}

TEST(TypeTable, AgreesWithGameSearch)
{
    std::vector<Graph> gs;
    enumerate_graphs(4, [&](const Graph& g) {
        gs.push_back(g);
        return true;
    });
    TypeTable table;
    for (int q = 0; q <= 2; ++q) {
        for (const auto& a : gs) {
            for (const auto& b : gs) {
                EXPECT_EQ(table.type_of(a, {}, q) == table.type_of(b, {}, q), types_equal(a, {}, b, {}, q))
                    << q << " " << upper_mask(a) << " " << upper_mask(b);
            }
        }
    }
}

TEST(TypeTable, AgreesWithGameSearchWithSets)
{
    std::mt19937_64 rng(62);
    TypeTable table;
    for (int t = 0; t < 150; ++t) {
        const Graph a = oracle::random_graph(1 + rng() % 5, 0.5, rng);
        const Graph b = oracle::random_graph(1 + rng() % 5, 0.5, rng);
        const VertexSet sa = VertexSet::from_mask(a.order(), rng() & ((1U << a.order()) - 1));
        const VertexSet sb = VertexSet::from_mask(b.order(), rng() & ((1U << b.order()) - 1));
        const std::span<const VertexSet> xa(&sa, 1);
        const std::span<const VertexSet> xb(&sb, 1);
        for (int q = 0; q <= 2; ++q) {
            EXPECT_EQ(table.type_of(a, xa, q) == table.type_of(b, xb, q), types_equal(a, xa, b, xb, q));
        }
    }
}

TEST(TypeTable, BipartiteRankThree)
{
    // K_{3,4} and K_{p,q} agree with the game search at rank 3.
    TypeTable table({8, 3});
    const Graph k34 = builders::complete_bipartite(3, 4);
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::size_t q = p; p + q <= 8; ++q) {
            const Graph other = builders::complete_bipartite(p, q);
            EXPECT_EQ(table.type_of(k34, {}, 3) == table.type_of(other, {}, 3),
                      types_equal(k34, {}, other, {}, 3))
                << p << "," << q;
        }
    }
}
