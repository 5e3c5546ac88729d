#pragma once

#include "msok/graph.hpp"
#include "msok/rankwidth.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace msok {

/// Smallest module of g containing both x and y, grown from {x, y} by adding
/// splitters until none is left. Throws std::invalid_argument for x == y.
VertexSet minimal_module(const Graph& g, Vertex x, Vertex y);

/// Decides v ~_d w: some module containing v and w induces a subgraph of
/// rank-width at most d. Verdicts are cached by minimal module, which recurs
/// across pairs. Not thread-safe; use one tester per thread.
class EquivalenceTester {
public:
    EquivalenceTester(const Graph& g, int d, std::size_t rank_width_cap = default_rank_width_cap);

    bool operator()(Vertex v, Vertex w);

    /// Minimal module behind the most recent positive verdict for v != w.
    const VertexSet& last_module() const noexcept { return last_module_; }

private:
    const Graph& graph_;
    int d_;
    std::size_t cap_;
    std::unordered_map<VertexSet, bool, VertexSetHash> verdicts_;
    VertexSet last_module_;
};

/// One-shot form of EquivalenceTester. Throws CapExceeded when the minimal
/// module is too large for the exact rank-width search.
bool equivalent_d(const Graph& g, Vertex v, Vertex w, int d, std::size_t rank_width_cap = default_rank_width_cap);

/// Modular partition whose classes all induce rank-width <= d.
struct Cover {
    std::vector<VertexSet> classes;
    int d = 0;

    std::size_t size() const noexcept { return classes.size(); }
    /// class_of[v] is the index of the class holding v.
    std::vector<std::size_t> class_index(std::size_t order) const;
};

/// Equivalence classes of ~_d, a smallest rank-width-d cover, ordered by
/// smallest member.
Cover rankwidth_cover(const Graph& g, int d, std::size_t rank_width_cap = default_rank_width_cap);

/// Classes of "N(v) \ {w} = N(w) \ {v}", ordered by smallest member.
std::vector<VertexSet> twin_classes(const Graph& g);
/// Number of twin classes.
std::size_t neighborhood_diversity(const Graph& g);

struct CoverCheck {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks that `classes` partition V(g) into modules of rank-width at most d.
CoverCheck verify_cover(const Graph& g, const std::vector<VertexSet>& classes, int d,
                        std::size_t rank_width_cap = default_rank_width_cap);

} // namespace msok
