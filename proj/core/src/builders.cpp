#include "msok/builders.hpp"

#include <stdexcept>

namespace msok::builders {

Graph edgeless(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph path(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        g.add_edge(v - 1, v);
    }
    return g;
}

Graph cycle(std::size_t n)
{
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    Graph g = path(n);
    g.add_edge(static_cast<Vertex>(n - 1), 0);
    return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = 0; v < b; ++v) {
            g.add_edge(u, static_cast<Vertex>(a + v));
        }
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) {
        g.add_edge(u, v);
    }
    const auto off = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) {
        g.add_edge(u + off, v + off);
    }
    return g;
}

Graph blow_up(const Graph& base, std::span<const Graph> blobs)
{
    if (blobs.size() != base.order()) {
        throw std::invalid_argument("blow_up: need one blob per base vertex");
    }
    std::vector<Vertex> offset(base.order() + 1, 0);
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        if (blobs[i].order() == 0) {
            throw std::invalid_argument("blow_up: empty blob");
        }
        offset[i + 1] = offset[i] + static_cast<Vertex>(blobs[i].order());
    }
    Graph g(offset.back());
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        for (auto [u, v] : blobs[i].edges()) {
            g.add_edge(offset[i] + u, offset[i] + v);
        }
    }
    for (auto [a, b] : base.edges()) {
        for (Vertex u = offset[a]; u < offset[a + 1]; ++u) {
            for (Vertex v = offset[b]; v < offset[b + 1]; ++v) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

} // namespace msok::builders
