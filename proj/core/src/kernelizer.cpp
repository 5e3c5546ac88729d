#include "msok/kernelizer.hpp"

#include "msok/enumerate.hpp"
#include "msok/errors.hpp"
#include "msok/model_check.hpp"
#include "msok/type_table.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace msok {
namespace {

// Walks the isomorphism-class catalog in enumeration order. Rank-widths and
// types of catalog graphs are computed once per finder.
class RepresentativeFinder {
public:
    RepresentativeFinder(TypeTable& table, const KernelConfig& config) : table_(table), config_(config) {}

    std::optional<Graph> find(TypeId target, int q, int d)
    {
        for (std::size_t n = 1; n <= config_.rep_cap; ++n) {
            const auto& masks = isomorphism_classes(n);
            for (std::size_t i = 0; i < masks.size(); ++i) {
                Entry& e = entry(n, i);
                if (e.width > d) {
                    continue;
                }
                auto [it, fresh] = e.types.try_emplace(q, 0);
                if (fresh) {
                    it->second = table_.type_of(e.graph, {}, q);
                }
                if (it->second == target) {
                    return e.graph;
                }
            }
        }
        return std::nullopt;
    }

private:
    struct Entry {
        Graph graph;
        int width = 0;
        std::map<int, TypeId> types;
    };

    Entry& entry(std::size_t n, std::size_t i)
    {
        auto& row = entries_[n];
        while (row.size() <= i) {
            Entry e;
            e.graph = graph_from_mask(n, isomorphism_classes(n)[row.size()]);
            e.width = rank_width(e.graph, {config_.rw_cap, false}).width;
            row.push_back(std::move(e));
        }
        return row[i];
    }

    TypeTable& table_;
    const KernelConfig& config_;
    std::map<std::size_t, std::vector<Entry>> entries_;
};

std::string describe_class(const Graph& g, std::size_t index, const VertexSet& cls)
{
    std::string names;
    cls.for_each([&](Vertex v) { names += (names.empty() ? "" : " ") + g.label(v); });
    return "class " + std::to_string(index + 1) + " {" + names + "}";
}

void check_type_cap(const Graph& g, std::size_t index, const VertexSet& cls, const KernelConfig& config)
{
    if (cls.count() > config.game.max_vertices) {
        throw CapExceeded(describe_class(g, index, cls) + " has " + std::to_string(cls.count())
                          + " vertices, above the type computation cap of "
                          + std::to_string(config.game.max_vertices) + " (raise it with --cap-game)");
    }
}

Graph representative_for(const Graph& g, std::size_t index, const VertexSet& cls, int q, int d,
                         TypeTable& table, RepresentativeFinder& finder, const KernelConfig& config)
{
    check_type_cap(g, index, cls, config);
    const Graph h = induced_subgraph(g, cls).graph;
    auto rep = finder.find(table.type_of(h, {}, q), q, d);
    if (!rep) {
        throw CapExceeded("no representative with at most " + std::to_string(config.rep_cap)
                          + " vertices found for " + describe_class(g, index, cls)
                          + " (raise it with --cap-rep)");
    }
    return *rep;
}

struct Assembled {
    Graph graph;
    std::vector<VertexSet> modules;
};

Assembled assemble(const Graph& g, const std::vector<VertexSet>& classes, const std::vector<Graph>& reps)
{
    std::vector<Vertex> offset;
    std::size_t total = 0;
    for (const auto& r : reps) {
        offset.push_back(static_cast<Vertex>(total));
        total += r.order();
    }
    Assembled out{Graph(total), {}};
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        VertexSet m(total);
        for (Vertex v = 0; v < reps[i].order(); ++v) {
            m.insert(offset[i] + v);
            labels.push_back(std::to_string(i + 1) + ":" + std::to_string(v + 1));
        }
        for (auto [u, v] : reps[i].edges()) {
            out.graph.add_edge(offset[i] + u, offset[i] + v);
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (modules_adjacent(g, classes[i], classes[j])) {
                for (Vertex u = 0; u < reps[i].order(); ++u) {
                    for (Vertex v = 0; v < reps[j].order(); ++v) {
                        out.graph.add_edge(offset[i] + u, offset[j] + v);
                    }
                }
            }
        }
        out.modules.push_back(std::move(m));
    }
    out.graph.set_labels(std::move(labels));
    return out;
}

int checked_rank(const Formula& phi, std::size_t free_sets, const char* who)
{
    if (phi.free_set_count() != free_sets) {
        throw std::invalid_argument(std::string(who) + ": formula must have exactly " + std::to_string(free_sets)
                                    + " free set variable" + (free_sets == 1 ? "" : "s") + ", it has "
                                    + std::to_string(phi.free_set_count()));
    }
    return quantifier_rank(phi);
}

} // namespace

Graph find_representative(const Graph& h, int q, int d, const KernelConfig& config)
{
    if (h.order() == 0) {
        throw std::invalid_argument("find_representative: empty graph");
    }
    TypeTable table(config.game);
    RepresentativeFinder finder(table, config);
    return representative_for(h, 0, h.vertices(), q, d, table, finder, config);
}

McKernel kernelize_mc(const Graph& g, const Formula& phi, int d, const KernelConfig& config)
{
    const int q = checked_rank(phi, 0, "kernelize_mc");
    McKernel out;
    out.q = q;
    out.d = d;
    if (g.order() == 0) {
        return out;
    }
    out.classes = rankwidth_cover(g, d, config.rw_cap).classes;
    TypeTable table(config.game);
    RepresentativeFinder finder(table, config);
    std::vector<Graph> reps;
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        reps.push_back(representative_for(g, i, out.classes[i], q, d, table, finder, config));
    }
    auto assembled = assemble(g, out.classes, reps);
    out.graph = std::move(assembled.graph);
    out.modules = std::move(assembled.modules);
    return out;
}

AnnotatedInstance kernelize_opt(const Graph& g, const Formula& phi, Direction direction, std::int64_t r, int d,
                                const KernelConfig& config)
{
    const int q = checked_rank(phi, 1, "kernelize_opt");
    AnnotatedInstance out;
    out.r = r;
    out.direction = direction;
    if (g.order() == 0) {
        return out;
    }
    out.classes = rankwidth_cover(g, d, config.rw_cap).classes;
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        if (out.classes[i].count() > config.opt_cap) {
            throw CapExceeded(describe_class(g, i, out.classes[i]) + " has " + std::to_string(out.classes[i].count())
                              + " vertices, above the subset search cap of " + std::to_string(config.opt_cap)
                              + " (raise it with --cap-opt)");
        }
    }
    TypeTable table(config.game);
    RepresentativeFinder finder(table, config);
    std::vector<Graph> reps;
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        reps.push_back(representative_for(g, i, out.classes[i], q + 1, d, table, finder, config));
    }
    auto assembled = assemble(g, out.classes, reps);
    out.graph = std::move(assembled.graph);
    out.modules = std::move(assembled.modules);
    const std::size_t total = out.graph.order();

    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        const auto sub = induced_subgraph(g, out.classes[i]);
        const Graph& h = sub.graph;
        const std::size_t n = h.order();
        const auto module_members = out.modules[i].members();
        const std::size_t m = reps[i].order();

        std::unordered_map<std::uint64_t, TypeId> subset_type;
        auto type_of_subset = [&](std::uint64_t w) {
            auto [it, fresh] = subset_type.try_emplace(w, 0);
            if (fresh) {
                const VertexSet s = VertexSet::from_mask(n, w);
                it->second = table.type_of(h, std::span<const VertexSet>(&s, 1), q);
            }
            return it->second;
        };

        for (std::uint64_t wk = 0; wk < (std::uint64_t{1} << m); ++wk) {
            const VertexSet local = VertexSet::from_mask(m, wk);
            const TypeId target = table.type_of(reps[i], std::span<const VertexSet>(&local, 1), q);
            std::optional<std::size_t> best;
            for (std::size_t step = 0; step <= n && !best; ++step) {
                const std::size_t size = direction == Direction::AtMost ? step : n - step;
                // Subsets of the given size in ascending mask order.
                std::uint64_t w = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
                const std::uint64_t limit = std::uint64_t{1} << n;
                while (w < limit) {
                    if (type_of_subset(w) == target) {
                        best = size;
                        break;
                    }
                    if (w == 0) {
                        break;
                    }
                    const std::uint64_t c = w & (~w + 1);
                    const std::uint64_t rr = w + c;
                    w = (((rr ^ w) >> 2) / c) | rr;
                }
            }
            if (!best) {
                throw std::logic_error("kernelize_opt: no subset of " + describe_class(g, i, out.classes[i])
                                       + " matches a subset type of its representative");
            }
            if (*best == 0) {
                continue;
            }
            AnnotationTriple t{VertexSet(total), VertexSet(total), *best};
            for (std::size_t v = 0; v < m; ++v) {
                (((wk >> v) & 1U) != 0 ? t.x : t.y).insert(module_members[v]);
            }
            out.annotation.triples.push_back(std::move(t));
        }
    }
    return out;
}

namespace {

void check_solve_cap(const Graph& g, std::size_t max_vertices)
{
    if (g.order() > max_vertices || g.order() > 62) {
        throw CapExceeded("brute-force solving on " + std::to_string(g.order())
                          + " vertices exceeds the cap of " + std::to_string(max_vertices));
    }
}

} // namespace

std::optional<std::uint64_t> solve_opt(const Graph& g, const Formula& phi, Direction direction,
                                       std::size_t max_vertices)
{
    checked_rank(phi, 1, "solve_opt");
    check_solve_cap(g, max_vertices);
    std::optional<std::uint64_t> best;
    const std::uint64_t end = std::uint64_t{1} << g.order();
    for (std::uint64_t z = 0; z < end; ++z) {
        const auto size = static_cast<std::uint64_t>(__builtin_popcountll(z));
        if (best && (direction == Direction::AtMost ? size >= *best : size <= *best)) {
            continue;
        }
        const VertexSet s = VertexSet::from_mask(g.order(), z);
        if (model_check(g, phi, std::span<const VertexSet>(&s, 1))) {
            best = size;
        }
    }
    return best;
}

std::optional<std::uint64_t> solve_annotated(const AnnotatedInstance& a, const Formula& phi,
                                             std::size_t max_vertices)
{
    checked_rank(phi, 1, "solve_annotated");
    check_solve_cap(a.graph, max_vertices);
    std::optional<std::uint64_t> best;
    const std::uint64_t end = std::uint64_t{1} << a.graph.order();
    for (std::uint64_t z = 0; z < end; ++z) {
        const VertexSet s = VertexSet::from_mask(a.graph.order(), z);
        const std::uint64_t value = annotation_value(a.annotation, s);
        if (best && (a.direction == Direction::AtMost ? value >= *best : value <= *best)) {
            continue;
        }
        if (model_check(a.graph, phi, std::span<const VertexSet>(&s, 1))) {
            best = value;
        }
    }
    return best;
}

bool meets_threshold(const std::optional<std::uint64_t>& optimum, Direction direction, std::int64_t r)
{
    if (!optimum) {
        return false;
    }
    const auto v = static_cast<std::int64_t>(*optimum);
    return direction == Direction::AtMost ? v <= r : v >= r;
}

} // namespace msok
