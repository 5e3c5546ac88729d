#include "msok/graph.hpp"

#include "msok/gf2.hpp"

#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace msok {

Graph::Graph(std::size_t order)
    : rows_(order, VertexSet(order))
{
}

Graph::Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges)
    : Graph(order)
{
    for (auto [u, v] : edges) {
        add_edge(u, v);
    }
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& row : rows_) {
        twice += row.count();
    }
    return twice / 2;
}

void Graph::check_vertex(Vertex v) const
{
    if (v >= order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for graph of order "
                                    + std::to_string(order()));
    }
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    rows_[u].insert(v);
    rows_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[u].erase(v);
    rows_[v].erase(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v = rows_[u].next(u); v < order(); v = rows_[u].next(v)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::label(Vertex v) const
{
    check_vertex(v);
    return labels_.empty() ? std::to_string(v + 1) : labels_[v];
}

void Graph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty()) {
        if (labels.size() != order()) {
            throw std::invalid_argument("label count " + std::to_string(labels.size()) + " does not match order "
                                        + std::to_string(order()));
        }
        std::unordered_set<std::string> seen;
        for (const auto& l : labels) {
            if (!seen.insert(l).second) {
                throw std::invalid_argument("duplicate vertex label '" + l + "'");
            }
        }
    }
    labels_ = std::move(labels);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g)
{
    std::vector<std::uint64_t> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        out[v] = g.neighbor_mask(v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order()) {
        throw std::invalid_argument("induced_subgraph: vertex set belongs to a graph of different order");
    }
    if (s.empty()) {
        throw std::invalid_argument("induced_subgraph: empty vertex set");
    }
    InducedSubgraph out;
    out.to_parent = s.members();
    const std::size_t k = out.to_parent.size();
    out.graph = Graph(k);
    for (Vertex i = 0; i < k; ++i) {
        const auto& row = g.neighbors(out.to_parent[i]);
        for (Vertex j = i + 1; j < k; ++j) {
            if (row.contains(out.to_parent[j])) {
                out.graph.add_edge(i, j);
            }
        }
    }
    if (g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(k);
        for (Vertex p : out.to_parent) {
            labels.push_back(g.label(p));
        }
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

int cut_rank(const Graph& g, const VertexSet& u)
{
    if (u.universe() != g.order()) {
        throw std::invalid_argument("cut_rank: vertex set belongs to a graph of different order");
    }
    const VertexSet rest = u.complement();
    if (u.empty() || rest.empty()) {
        return 0;
    }
    // Rows indexed by the smaller side keep elimination short.
    const VertexSet& row_side = u.count() <= rest.count() ? u : rest;
    const VertexSet& col_side = u.count() <= rest.count() ? rest : u;
    if (g.order() <= 64) {
        const std::uint64_t cols = col_side.to_mask();
        std::vector<std::uint64_t> rows;
        rows.reserve(row_side.count());
        row_side.for_each([&](Vertex v) { rows.push_back(g.neighbor_mask(v) & cols); });
        return gf2::rank(rows);
    }
    std::vector<std::vector<std::uint64_t>> rows;
    row_side.for_each([&](Vertex v) {
        VertexSet r = g.neighbors(v) & col_side;
        rows.emplace_back(r.words().begin(), r.words().end());
    });
    return gf2::rank(rows);
}

bool is_module(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order()) {
        throw std::invalid_argument("is_module: vertex set belongs to a graph of different order");
    }
    if (s.empty()) {
        throw std::invalid_argument("is_module: empty vertex set");
    }
    const VertexSet outside = s.complement();
    for (Vertex v = outside.first(); v < g.order(); v = outside.next(v)) {
        const VertexSet seen = g.neighbors(v) & s;
        if (!seen.empty() && !(seen == s)) {
            return false;
        }
    }
    return true;
}

bool modules_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("modules_adjacent: empty module");
    }
    if (a.intersects(b)) {
        throw std::invalid_argument("modules_adjacent: modules overlap");
    }
    if (!is_module(g, a) || !is_module(g, b)) {
        throw std::invalid_argument("modules_adjacent: argument is not a module");
    }
    const bool adj = g.adjacent(a.first(), b.first());
#ifndef NDEBUG
    a.for_each([&](Vertex x) {
        b.for_each([&](Vertex y) { assert(g.adjacent(x, y) == adj); });
    });
#endif
    return adj;
}

} // namespace msok
