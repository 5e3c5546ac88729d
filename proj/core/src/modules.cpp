#include "msok/modules.hpp"

#include "msok/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace msok {

VertexSet minimal_module(const Graph& g, Vertex x, Vertex y)
{
    if (x >= g.order() || y >= g.order()) {
        throw std::invalid_argument("minimal_module: vertex out of range");
    }
    if (x == y) {
        throw std::invalid_argument("minimal_module: x and y must differ (the singleton {x} is the answer)");
    }
    // An outside vertex splits M exactly when it separates x from some
    // member z, so each new member only has to be compared against x.
    VertexSet m(g.order(), {x, y});
    std::deque<Vertex> pending{y};
    while (!pending.empty()) {
        const Vertex z = pending.front();
        pending.pop_front();
        VertexSet splitters = (g.neighbors(x) ^ g.neighbors(z)) - m;
        splitters.for_each([&](Vertex v) {
            m.insert(v);
            pending.push_back(v);
        });
    }
    return m;
}

EquivalenceTester::EquivalenceTester(const Graph& g, int d, std::size_t rank_width_cap)
    : graph_(g), d_(d), cap_(rank_width_cap)
{
    if (d < 0) {
        throw std::invalid_argument("rank-width bound d must be nonnegative");
    }
}

namespace {

// Rank-width is hereditary, so a small induced subgraph of width above d
// refutes the whole module. Tries the breadth-first ball around each end.
bool refuted_by_small_subgraph(const Graph& g, const VertexSet& module, Vertex v, Vertex w, int d,
                               std::size_t cap)
{
    for (Vertex start : {v, w}) {
        VertexSet ball(g.order(), {start});
        std::deque<Vertex> queue{start};
        std::size_t size = 1;
        while (!queue.empty() && size < cap) {
            const Vertex u = queue.front();
            queue.pop_front();
            const VertexSet fresh = (g.neighbors(u) & module) - ball;
            for (Vertex x = fresh.first(); x < g.order() && size < cap; x = fresh.next(x)) {
                ball.insert(x);
                queue.push_back(x);
                ++size;
            }
        }
        if (ball.count() > 1 && !rank_width_at_most(induced_subgraph(g, ball).graph, d, cap)) {
            return true;
        }
    }
    return false;
}

} // namespace

bool EquivalenceTester::operator()(Vertex v, Vertex w)
{
    if (v >= graph_.order() || w >= graph_.order()) {
        throw std::invalid_argument("equivalent_d: vertex out of range");
    }
    if (v == w) {
        last_module_ = VertexSet(graph_.order(), {v});
        return true;
    }
    VertexSet m = minimal_module(graph_, v, w);
    auto it = verdicts_.find(m);
    if (it == verdicts_.end()) {
        bool verdict = false;
        if (m.count() <= cap_) {
            verdict = rank_width_at_most(induced_subgraph(graph_, m).graph, d_, cap_);
        } else if (!refuted_by_small_subgraph(graph_, m, v, w, d_, cap_)) {
            throw CapExceeded("minimal module of vertices " + graph_.label(v) + " and " + graph_.label(w) + " has "
                              + std::to_string(m.count()) + " vertices, above the rank-width cap of "
                              + std::to_string(cap_) + " (raise it with --cap-rw)");
        }
        it = verdicts_.emplace(m, verdict).first;
    }
    if (it->second) {
        last_module_ = std::move(m);
    }
    return it->second;
}

bool equivalent_d(const Graph& g, Vertex v, Vertex w, int d, std::size_t rank_width_cap)
{
    EquivalenceTester tester(g, d, rank_width_cap);
    return tester(v, w);
}

std::vector<std::size_t> Cover::class_index(std::size_t order) const
{
    std::vector<std::size_t> out(order, classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].for_each([&](Vertex v) { out[v] = i; });
    }
    return out;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }

    std::vector<std::size_t> parent;
};

std::vector<VertexSet> classes_from(UnionFind& uf, std::size_t n)
{
    std::vector<VertexSet> out;
    std::vector<std::size_t> slot(n, n);
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t r = uf.find(v);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.emplace_back(n);
        }
        out[slot[r]].insert(v);
    }
    return out;
}

} // namespace

Cover rankwidth_cover(const Graph& g, int d, std::size_t rank_width_cap)
{
    const std::size_t n = g.order();
    EquivalenceTester equivalent(g, d, rank_width_cap);
    UnionFind uf(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) {
            if (uf.find(v) == uf.find(w)) {
                continue;
            }
            if (equivalent(v, w)) {
                // Every pair inside the witnessing module is equivalent too.
                equivalent.last_module().for_each([&](Vertex u) { uf.unite(v, u); });
            }
        }
    }
    return Cover{classes_from(uf, n), d};
}

std::vector<VertexSet> twin_classes(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<Vertex> reps;
    UnionFind uf(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex r : reps) {
            VertexSet diff = g.neighbors(v) ^ g.neighbors(r);
            diff.erase(v);
            diff.erase(r);
            if (diff.empty()) {
                uf.unite(r, v);
                break;
            }
        }
        if (uf.find(v) == v) {
            reps.push_back(v);
        }
    }
    return classes_from(uf, n);
}

std::size_t neighborhood_diversity(const Graph& g) { return twin_classes(g).size(); }

CoverCheck verify_cover(const Graph& g, const std::vector<VertexSet>& classes, int d, std::size_t rank_width_cap)
{
    auto fail = [](std::string why) { return CoverCheck{false, std::move(why)}; };
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        if (c.universe() != g.order()) {
            return fail("class " + std::to_string(i) + " belongs to a graph of different order");
        }
        if (c.empty()) {
            return fail("class " + std::to_string(i) + " is empty");
        }
        if (c.intersects(seen)) {
            return fail("class " + std::to_string(i) + " overlaps an earlier class");
        }
        seen |= c;
    }
    if (!(seen == g.vertices())) {
        return fail("classes miss vertices " + (g.vertices() - seen).to_string());
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!is_module(g, classes[i])) {
            return fail("class " + std::to_string(i) + " " + classes[i].to_string() + " is not a module");
        }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!rank_width_at_most(induced_subgraph(g, classes[i]).graph, d, rank_width_cap)) {
            return fail("class " + std::to_string(i) + " " + classes[i].to_string() + " has rank-width above "
                        + std::to_string(d));
        }
    }
    return {};
}

} // namespace msok
