#include "msok/builders.hpp"
#include "msok/errors.hpp"
#include "msok/formula.hpp"
#include "msok/model_check.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace msok;

namespace {

const oracle::Sentence& sentence(const std::string& name)
{
    for (const auto& s : oracle::sentences()) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::out_of_range(name);
}

} // namespace

TEST(ModelCheck, SmallExamples)
{
    const Formula has_edge = parse_formula(sentence("has-edge").text);
    EXPECT_TRUE(model_check(builders::complete(3), has_edge));
    EXPECT_FALSE(model_check(builders::edgeless(3), has_edge));
    EXPECT_FALSE(model_check(builders::cycle(5), parse_formula(sentence("2-colorable").text)));
    EXPECT_TRUE(model_check(builders::cycle(5), parse_formula(sentence("3-colorable").text)));
    EXPECT_FALSE(model_check(Graph(), has_edge));
}

TEST(ModelCheck, FreeSets)
{
    const Formula vc = parse_formula(oracle::opt_problems().front().text);
    const Graph c4 = builders::cycle(4);
    EXPECT_TRUE(model_check(c4, vc, std::vector<VertexSet>{VertexSet(4, {0, 2})}));
    EXPECT_FALSE(model_check(c4, vc, std::vector<VertexSet>{VertexSet(4, {0, 1})}));
    const Interpretation in{&c4, {VertexSet(4, {1, 3})}};
    EXPECT_TRUE(model_check(in, vc));
}

TEST(ModelCheck, RejectsMismatches)
{
    const Formula vc = parse_formula(oracle::opt_problems().front().text);
    const Graph c4 = builders::cycle(4);
    EXPECT_THROW(model_check(c4, vc), std::invalid_argument);
    EXPECT_THROW(model_check(c4, vc, std::vector<VertexSet>{VertexSet(5)}), std::invalid_argument);
    EXPECT_THROW(model_check(builders::path(65), parse_formula(sentence("has-edge").text)), CapExceeded);
}

TEST(ModelCheck, AgreesWithDirectComputation)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        const Graph g = oracle::random_graph(1 + rng() % 7, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100, rng);
        for (const auto& s : oracle::sentences()) {
            EXPECT_EQ(model_check(g, parse_formula(s.text)), s.truth(g)) << s.name;
        }
    }
}

TEST(ModelCheck, SugaredAndCoreFormsAgree)
{
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        const Graph g = oracle::random_graph(1 + rng() % 6, 0.5, rng);
        for (const auto& s : oracle::sentences()) {
            const Formula raw = parse_formula(s.text, {.free_sets = {}, .desugar = false});
            EXPECT_EQ(model_check(g, raw), model_check(g, desugar(raw))) << s.name;
        }
    }
}
