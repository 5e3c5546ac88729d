#pragma once

#include "msok/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace msok {

/// Bit of the pair {i, j}, i < j, in an upper-triangle adjacency mask:
/// j(j-1)/2 + i, so pairs run (0,1), (0,2), (1,2), (0,3), ...
constexpr unsigned pair_bit(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }

/// Largest order whose adjacency fits a 64-bit upper-triangle mask.
inline constexpr std::size_t max_mask_order = 11;

Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t upper_mask(const Graph& g);

/// Smallest upper-triangle mask over all relabelings of g (n <= 9).
std::uint64_t canonical_mask(const Graph& g);

/// Visits all labeled graphs on 1..max_n vertices ordered by vertex count,
/// then by ascending upper-triangle mask. Stops early when visit returns
/// false.
void enumerate_graphs(std::size_t max_n, const std::function<bool(const Graph&)>& visit);

/// Isomorphism classes on n vertices (n <= 7), each given by its smallest
/// mask, in ascending order. That mask is where the class first appears in
/// enumerate_graphs. Computed once per order; thread-safe.
const std::vector<std::uint64_t>& isomorphism_classes(std::size_t n);

} // namespace msok
