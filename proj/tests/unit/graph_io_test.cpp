#include "msok/builders.hpp"
#include "msok/errors.hpp"
#include "msok/graph_io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msok;

TEST(GraphIo, HeaderForm)
{
    const Graph g = parse_graph("c triangle\np 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(g, builders::complete(3));
    EXPECT_EQ(g.label(0), "1");
}

TEST(GraphIo, HeaderWithFormatWord)
{
    EXPECT_EQ(parse_graph("p edge 4 1\ne 1 4\n").order(), 4U);
}

TEST(GraphIo, IsolatedVerticesFromHeader)
{
    const Graph g = parse_graph("p 5 1\ne 2 3\n");
    EXPECT_EQ(g.order(), 5U);
    EXPECT_EQ(g.edge_count(), 1U);
}

TEST(GraphIo, BareFormUsesFirstAppearance)
{
    const Graph g = parse_graph("b a\nc_x b\n");
    EXPECT_EQ(g.order(), 3U);
    EXPECT_EQ(g.label(0), "b");
    EXPECT_EQ(g.label(2), "c_x");
    EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(GraphIo, Errors)
{
    try {
        parse_graph("p 3 1\ne 1 4\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_NE(std::string(e.what()).find("undeclared"), std::string::npos);
    }
    EXPECT_THROW(parse_graph("p 3 1\ne 2 2\n"), ParseError);
    EXPECT_THROW(parse_graph("e 1 2\np 3 1\n"), ParseError);
    EXPECT_THROW(parse_graph("p 3\n"), ParseError);
    EXPECT_THROW(parse_graph("1 2 3\n"), ParseError);
}

TEST(GraphIo, WarningsForDuplicatesAndCounts)
{
    std::vector<std::string> warnings;
    const Graph g = parse_graph("p 3 3\ne 1 2\ne 2 1\n", &warnings);
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_EQ(warnings.size(), 2U);
}

TEST(GraphIo, RoundTripOnRandomGraphs)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Graph g = oracle::random_graph(1 + rng() % 20, 0.4, rng);
        EXPECT_EQ(parse_graph(emit_graph(g)), g);
    }
}

TEST(GraphIo, EmitIsDeterministic)
{
    const Graph g = builders::cycle(4);
    EXPECT_EQ(emit_graph(g), "p 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
    EXPECT_EQ(emit_graph(g), emit_graph(parse_graph(emit_graph(g))));
}

TEST(GraphIo, MissingFile)
{
    EXPECT_THROW(read_text_file("/nonexistent/graph.gr"), std::runtime_error);
}

TEST(GraphIo, SmallDocuments)
{
    EXPECT_EQ(parse_graph("p 2 0"), builders::edgeless(2));
    EXPECT_THROW(parse_graph("e 1 1"), ParseError);
}
