#pragma once

#include "msok/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace msok {

/// Reads the edge-list format:
///
///     c <comment>
///     p <n> <m>        optional header; vertices are then 1..n
///     e <u> <v>        edge
///     <u> <v>          edge, bare form
///
/// Without a header, vertex labels are arbitrary tokens and vertices are
/// numbered by first appearance. With a header, labels must be integers in
/// 1..n and vertex i carries label i. Self-loops are errors; duplicate edges
/// and an edge count that disagrees with the header are reported through
/// `warnings` (when given) and otherwise ignored.
Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Header form with 1-based indices. Labels are not written, so
/// parse_graph(emit_graph(g)) == g structurally and carries labels "1".."n".
std::string emit_graph(const Graph& g);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string& path);

} // namespace msok
