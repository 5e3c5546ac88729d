#include "msok/builders.hpp"
#include "msok/errors.hpp"
#include "msok/formula.hpp"
#include "msok/graph_io.hpp"
#include "msok/kernel_io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace msok;

namespace {

Graph c5_k3_blowup()
{
    const std::vector<Graph> blobs(5, builders::complete(3));
    return builders::blow_up(builders::cycle(5), blobs);
}

} // namespace

TEST(KernelIo, McKernelDocument)
{
    const McKernel k = kernelize_mc(builders::complete(6), parse_formula(oracle::sentences().front().text), 1);
    const std::string doc = emit_kernel(k);
    EXPECT_NE(doc.find("module 1: 1:1 1:2\n"), std::string::npos) << doc;
    const AnnotatedInstance back = parse_annotated(doc);
    EXPECT_EQ(back.graph, k.graph);
    EXPECT_EQ(back.modules, k.modules);
    EXPECT_TRUE(back.annotation.triples.empty());
}

TEST(KernelIo, AnnotatedRoundTrip)
{
    const Formula phi = parse_formula(oracle::opt_problems()[2].text);
    const AnnotatedInstance a = kernelize_opt(c5_k3_blowup(), phi, Direction::AtLeast, 2, 1);
    const std::string doc = emit_annotated(a);
    const AnnotatedInstance b = parse_annotated(doc);
    EXPECT_EQ(b.graph, a.graph);
    EXPECT_EQ(b.modules, a.modules);
    EXPECT_EQ(b.r, 2);
    EXPECT_EQ(b.direction, Direction::AtLeast);
    ASSERT_EQ(b.annotation.triples.size(), a.annotation.triples.size());
    for (std::size_t i = 0; i < a.annotation.triples.size(); ++i) {
        EXPECT_EQ(b.annotation.triples[i].x, a.annotation.triples[i].x);
        EXPECT_EQ(b.annotation.triples[i].y, a.annotation.triples[i].y);
        EXPECT_EQ(b.annotation.triples[i].w, a.annotation.triples[i].w);
    }
    EXPECT_EQ(emit_annotated(b), doc);
    EXPECT_EQ(solve_annotated(b, phi), solve_annotated(a, phi));
}

TEST(KernelIo, DefaultsAndErrors)
{
    const AnnotatedInstance plain = parse_annotated("p 2 1\ne 1 2\n");
    EXPECT_EQ(plain.r, 0);
    EXPECT_EQ(plain.direction, Direction::AtMost);
    EXPECT_THROW(parse_annotated("p 2 1\ne 1 2\nannotation (1 | 9 | 1)\n"), ParseError);
    EXPECT_THROW(parse_annotated("p 2 1\ne 1 2\nannotation (1 | 1 | 1)\n"), ParseError);
    EXPECT_THROW(parse_annotated("p 2 1\ne 1 2\nthreshold many\n"), ParseError);
    EXPECT_THROW(parse_annotated("p 2 1\ne 1 2\ndirection <\n"), ParseError);
}
