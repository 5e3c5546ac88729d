#include "msok/builders.hpp"
#include "msok/formula.hpp"
#include "msok/game.hpp"
#include "msok/graph_io.hpp"
#include "msok/kernelizer.hpp"
#include "msok/model_check.hpp"
#include "msok/modules.hpp"
#include "msok/rankwidth.hpp"
#include "msok/type_table.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace msok;

namespace {

Graph random_small(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    const std::size_t n = lo + rng() % (hi - lo + 1);
    return oracle::random_graph(n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100, rng);
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) {
        if (rng() % 2 == 0) {
            s.insert(v);
        }
    }
    return s;
}

} // namespace

TEST(Properties, CutRankIsSymmetricAndBounded)
{
    std::mt19937_64 rng(81);
    for (int t = 0; t < 100; ++t) {
        const Graph g = random_small(rng, 1, 14);
        const VertexSet u = random_subset(rng, g.order());
        const int r = cut_rank(g, u);
        EXPECT_EQ(r, cut_rank(g, u.complement()));
        EXPECT_LE(static_cast<std::size_t>(r), std::min(u.count(), g.order() - u.count()));
        EXPECT_EQ(r, oracle::cut_rank(g, u));
    }
}

TEST(Properties, ModulesAreClosedUnderOverlappingUnion)
{
    std::mt19937_64 rng(82);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_small(rng, 3, 9);
        const Vertex a = static_cast<Vertex>(rng() % g.order());
        const Vertex b = static_cast<Vertex>((a + 1) % g.order());
        const Vertex c = static_cast<Vertex>((a + 2) % g.order());
        const VertexSet m1 = minimal_module(g, a, b);
        const VertexSet m2 = minimal_module(g, b, c);
        EXPECT_TRUE(is_module(g, m1 | m2));
        EXPECT_TRUE(is_module(g, m1 & m2));
    }
}

TEST(Properties, EquivalenceIsAnEquivalence)
{
    std::mt19937_64 rng(83);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_small(rng, 1, 9);
        for (int d = 0; d <= 2; ++d) {
            EquivalenceTester eq(g, d);
            const std::size_t n = g.order();
            std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
            for (Vertex v = 0; v < n; ++v) {
                for (Vertex w = 0; w < n; ++w) {
                    rel[v][w] = eq(v, w);
                }
            }
            for (Vertex v = 0; v < n; ++v) {
                EXPECT_TRUE(rel[v][v]);
                for (Vertex w = 0; w < n; ++w) {
                    EXPECT_EQ(rel[v][w], rel[w][v]);
                    for (Vertex x = 0; x < n; ++x) {
                        if (rel[v][w] && rel[w][x]) {
                            EXPECT_TRUE(rel[v][x]);
                        }
                    }
                }
            }
        }
    }
}

TEST(Properties, GraphDocumentsRoundTrip)
{
    std::mt19937_64 rng(84);
    for (int t = 0; t < 50; ++t) {
        const Graph g = random_small(rng, 1, 20);
        const std::string doc = emit_graph(g);
        EXPECT_EQ(parse_graph(doc), g);
        EXPECT_EQ(emit_graph(parse_graph(doc)), doc);
    }
}

TEST(Properties, OutputIsDeterministic)
{
    const auto corpus = oracle::blow_up_corpus(4, 5);
    const Formula phi = parse_formula(oracle::sentences().front().text);
    for (const auto& g : corpus) {
        const auto a = rankwidth_cover(g, 1);
        const auto b = rankwidth_cover(g, 1);
        EXPECT_EQ(a.classes, b.classes);
        EXPECT_EQ(kernelize_mc(g, phi, 1).graph, kernelize_mc(g, phi, 1).graph);
    }
}

TEST(Properties, ReplacingAModuleByAnEqualTypeKeepsSentences)
{
    // Swap one blob of a blow-up for another graph of the same rank-q type.
    std::mt19937_64 rng(85);
    TypeTable table;
    for (int t = 0; t < 25; ++t) {
        const Graph base = random_small(rng, 2, 4);
        std::vector<Graph> blobs;
        for (std::size_t i = 0; i < base.order(); ++i) {
            blobs.push_back(random_small(rng, 1, 3));
        }
        const Graph g = builders::blow_up(base, blobs);
        for (const auto& s : oracle::sentences()) {
            if (s.rank > 2) {
                continue;
            }
            const Graph rep = find_representative(blobs[0], s.rank, 3);
            EXPECT_EQ(table.type_of(rep, {}, s.rank), table.type_of(blobs[0], {}, s.rank));
            std::vector<Graph> swapped = blobs;
            swapped[0] = rep;
            const Graph h = builders::blow_up(base, swapped);
            const Formula phi = parse_formula(s.text);
            EXPECT_EQ(model_check(g, phi), model_check(h, phi)) << s.name;
        }
    }
}

TEST(Properties, KernelIsACoverOfItself)
{
    const auto corpus = oracle::blow_up_corpus(6, 9);
    const Formula phi = parse_formula(oracle::sentences()[1].text);
    for (const auto& g : corpus) {
        const McKernel k = kernelize_mc(g, phi, 1);
        EXPECT_TRUE(verify_cover(k.graph, k.modules, 1)) << verify_cover(k.graph, k.modules, 1).diagnostic;
    }
}
