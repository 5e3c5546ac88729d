#pragma once

#include "msok/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace msok {

/// Undirected simple graph on vertices 0..n-1, adjacency stored as one bit
/// row per vertex. Optional labels are carried for I/O only and do not take
/// part in equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);
    Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept;

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const noexcept { return rows_[v]; }
    /// Neighbourhood of v as a machine word; requires order() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const { return rows_[v].to_mask(); }

    /// Throws std::invalid_argument on self-loops or out-of-range vertices.
    /// Adding an existing edge is a no-op.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// The stored label, or the 1-based index when the graph is unlabeled.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Labels must be pairwise distinct and number order(); an empty vector
    /// clears them.
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

/// Adjacency rows as words; requires order() <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the parent vertex of subgraph vertex i (ascending).
    std::vector<Vertex> to_parent;
};

/// G[S]; vertices keep their relative order and labels. Throws
/// std::invalid_argument when S is empty.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// GF(2) rank of the adjacency submatrix A[U, V \ U]; 0 for U empty or full.
int cut_rank(const Graph& g, const VertexSet& u);

/// Every vertex outside S sees all of S or none of S. Throws
/// std::invalid_argument when S is empty.
bool is_module(const Graph& g, const VertexSet& s);

/// For disjoint modules A and B: some (equivalently every) pair a in A,
/// b in B is an edge. Throws std::invalid_argument when the inputs overlap
/// or are not modules.
bool modules_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b);

} // namespace msok
