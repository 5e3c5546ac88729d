#pragma once

// Slow reference implementations for the tests. None of them calls the
// library's algorithms; they only use Graph and VertexSet as containers.

#include "msok/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using msok::Graph;
using msok::Vertex;
using msok::VertexSet;

/// GF(2) rank of a 0/1 matrix by textbook elimination.
int matrix_rank(std::vector<std::vector<int>> m);

/// Rank of A[U, V \ U] built entry by entry.
int cut_rank(const Graph& g, const VertexSet& u);

/// Minimum over all unrooted subcubic trees with leaf set V(g) of the
/// largest edge cut-rank. Enumerates (2n-5)!! trees; n <= 8.
int rank_width(const Graph& g);

bool is_module(const Graph& g, const VertexSet& s);

/// Smallest module containing x and y found by scanning all subsets.
VertexSet minimal_module(const Graph& g, Vertex x, Vertex y);

/// Number of classes of a smallest partition of V(g) into modules of
/// rank-width at most d, by trying every set partition (n <= 8).
std::size_t min_cover_size(const Graph& g, int d);

/// Twin classes by direct comparison of neighbourhoods.
std::size_t neighborhood_diversity(const Graph& g);

bool k_colorable(const Graph& g, int k);
bool has_independent_dominating_set(const Graph& g);
bool has_dominating_vertex(const Graph& g);

enum class Objective { VertexCover, DominatingSet, IndependentSet, Clique, DominatingClique };
/// Min (minimize = true) or max size of a set with the property.
std::optional<std::size_t> optimum(const Graph& g, Objective what, bool minimize);

/// Sentences with a brute-force verdict function and their quantifier rank.
struct Sentence {
    std::string name;
    std::string text;
    int rank;
    bool (*truth)(const Graph&);
};
const std::vector<Sentence>& sentences();

struct OptProblem {
    std::string name;
    std::string text;
    Objective objective;
};
const std::vector<OptProblem>& opt_problems();

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Pair {i, j}, i < j, is bit j(j-1)/2 + i.
Graph from_mask(std::size_t n, std::uint64_t mask);

/// Blow-ups with small blobs, all on at most 12 vertices: a few of C5 and
/// P4 on at most 6 vertices, the rest of fixed prime graphs of rank-width 3
/// on 8 or 9 vertices. Deterministic for a seed.
std::vector<Graph> blow_up_corpus(std::size_t count, std::uint64_t seed);

} // namespace oracle
