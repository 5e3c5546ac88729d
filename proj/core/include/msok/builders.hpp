#pragma once

#include "msok/graph.hpp"

#include <random>
#include <span>

namespace msok::builders {

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
/// Path 0-1-...-(n-1).
Graph path(std::size_t n);
/// Cycle 0-1-...-(n-1)-0; requires n >= 3.
Graph cycle(std::size_t n);
/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Replaces vertex i of `base` by a copy of `blobs[i]`; copies of adjacent
/// base vertices are joined completely. Each copy is a module of the result,
/// with vertices laid out blob by blob.
Graph blow_up(const Graph& base, std::span<const Graph> blobs);

/// G(n, p) with each edge drawn independently.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

} // namespace msok::builders
