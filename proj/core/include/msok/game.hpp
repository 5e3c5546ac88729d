#pragma once

#include "msok/graph.hpp"

#include <span>
#include <vector>

namespace msok {

/// One side of a game position: a graph with a tuple of sets and a tuple of
/// chosen vertices.
struct Side {
    const Graph* graph = nullptr;
    std::vector<VertexSet> sets;
    std::vector<Vertex> vertices;
};

struct GamePosition {
    Side left;
    Side right;
    int rounds_left = 0;
};

struct GameLimits {
    std::size_t max_vertices = 8;
    int max_rounds = 3;
};

/// True when the chosen vertices have the same equality and adjacency pattern
/// on both sides and every chosen vertex lies in the same sets on both sides.
/// Throws std::invalid_argument when the tuple lengths differ.
bool partial_isomorphism(const Side& left, const Side& right);

/// Whether the duplicator wins the MSO game from the given position.
/// Throws CapExceeded when a graph or the round count is above the limits.
bool duplicator_wins(const GamePosition& position, const GameLimits& limits = {});

/// (g1, sets1) and (g2, sets2) have the same rank-q MSO type, decided by
/// exhaustive game search.
bool types_equal(const Graph& g1, std::span<const VertexSet> sets1, const Graph& g2, std::span<const VertexSet> sets2,
                 int q, const GameLimits& limits = {});

} // namespace msok
