#include "msok/rankwidth.hpp"

#include "msok/errors.hpp"
#include "msok/gf2.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace msok {
namespace {

void check_cap(const Graph& g, std::size_t max_vertices)
{
    if (g.order() > max_vertices || g.order() > 30) {
        throw CapExceeded("rank-width search on " + std::to_string(g.order()) + " vertices exceeds the cap of "
                          + std::to_string(std::min<std::size_t>(max_vertices, 30))
                          + " (raise it with --cap-rw)");
    }
}

int subset_cut_rank(const std::vector<std::uint64_t>& adj, std::uint32_t full, std::uint32_t s)
{
    const std::uint32_t rest = full & ~s;
    if (s == 0 || rest == 0) {
        return 0;
    }
    std::uint32_t side = __builtin_popcount(s) <= __builtin_popcount(rest) ? s : rest;
    const std::uint32_t cols = full & ~side;
    std::uint64_t rows[32];
    int k = 0;
    while (side != 0) {
        const int v = __builtin_ctz(side);
        rows[k++] = adj[static_cast<std::size_t>(v)] & cols;
        side &= side - 1;
    }
    return gf2::rank(std::span<std::uint64_t>(rows, static_cast<std::size_t>(k)));
}

/// Cut-rank of every subset of a graph with at most 30 vertices.
std::vector<std::uint8_t> all_cut_ranks(const Graph& g)
{
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = g.order() == 32 ? ~0U : ((1U << g.order()) - 1);
    std::vector<std::uint8_t> cr(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s < full; ++s) {
        const std::uint32_t c = full & ~s;
        if (c < s) {
            cr[s] = cr[c];
        } else {
            cr[s] = static_cast<std::uint8_t>(subset_cut_rank(adj, full, s));
        }
    }
    return cr;
}

} // namespace

RankWidthResult rank_width(const Graph& g, RankWidthOptions options)
{
    check_cap(g, options.max_vertices);
    RankWidthResult result;
    const std::size_t n = g.order();
    if (n == 0) {
        return result;
    }
    if (n == 1) {
        if (options.with_witness) {
            SplitTree t;
            t.nodes.push_back({VertexSet::full(1), -1, -1});
            t.root = 0;
            result.witness = std::move(t);
        }
        return result;
    }

    const auto cr = all_cut_ranks(g);
    const std::uint32_t full = (1U << n) - 1;
    std::vector<std::uint8_t> rec(std::size_t{full} + 1, 0);
    std::vector<std::uint32_t> best_split(options.with_witness ? std::size_t{full} + 1 : 0, 0);

    for (std::uint32_t s = 1; s <= full; ++s) {
        if ((s & (s - 1)) == 0) {
            rec[s] = cr[s];
            continue;
        }
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        std::uint8_t best = 0xff;
        std::uint32_t best_first = 0;
        // Submasks of `rest` in descending order; `<=` keeps the smallest
        // first part among ties.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t first = low | sub;
            if (first != s) {
                const std::uint8_t v = std::max(rec[first], rec[s ^ first]);
                if (v <= best) {
                    best = v;
                    best_first = first;
                    if (!options.with_witness && best <= cr[s]) {
                        break;
                    }
                }
            }
            if (sub == 0) {
                break;
            }
        }
        rec[s] = std::max(cr[s], best);
        if (options.with_witness) {
            best_split[s] = best_first;
        }
    }
    result.width = rec[full];

    if (options.with_witness) {
        SplitTree t;
        std::function<int(std::uint32_t)> build = [&](std::uint32_t s) -> int {
            const int id = static_cast<int>(t.nodes.size());
            t.nodes.push_back({VertexSet::from_mask(n, s), -1, -1});
            if ((s & (s - 1)) != 0) {
                const int l = build(best_split[s]);
                const int r = build(s ^ best_split[s]);
                t.nodes[static_cast<std::size_t>(id)].left = l;
                t.nodes[static_cast<std::size_t>(id)].right = r;
            }
            return id;
        };
        t.root = build(full);
        result.witness = std::move(t);
    }
    return result;
}

bool rank_width_at_most(const Graph& g, int d, std::size_t max_vertices)
{
    if (d < 0) {
        return false;
    }
    check_cap(g, max_vertices);
    const std::size_t n = g.order();
    if (n <= 1) {
        return true;
    }
    if (g.edge_count() == 0) {
        return true;
    }
    if (d == 0) {
        return false;
    }

    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (1U << n) - 1;
    std::vector<std::int8_t> cr(std::size_t{full} + 1, -1);
    std::vector<std::int8_t> memo(std::size_t{full} + 1, -1);

    auto rank_of = [&](std::uint32_t s) -> int {
        std::int8_t& slot = cr[s];
        if (slot < 0) {
            slot = static_cast<std::int8_t>(subset_cut_rank(adj, full, s));
            cr[full & ~s] = slot;
        }
        return slot;
    };

    std::function<bool(std::uint32_t)> feasible = [&](std::uint32_t s) -> bool {
        if ((s & (s - 1)) == 0) {
            return true;
        }
        std::int8_t& m = memo[s];
        if (m >= 0) {
            return m == 1;
        }
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        bool ok = false;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t first = low | sub;
            if (first != s) {
                const std::uint32_t second = s ^ first;
                if (rank_of(first) <= d && rank_of(second) <= d && feasible(first) && feasible(second)) {
                    ok = true;
                    break;
                }
            }
            if (sub == 0) {
                break;
            }
        }
        memo[s] = ok ? 1 : 0;
        return ok;
    };
    return feasible(full);
}

int split_tree_width(const Graph& g, const SplitTree& tree)
{
    if (g.order() == 0) {
        return 0;
    }
    if (tree.root < 0 || static_cast<std::size_t>(tree.root) >= tree.nodes.size()) {
        throw std::invalid_argument("split tree has no valid root");
    }
    if (!(tree.nodes[static_cast<std::size_t>(tree.root)].members == g.vertices())) {
        throw std::invalid_argument("split tree root does not hold every vertex");
    }
    int width = 0;
    std::size_t visited = 0;
    std::function<void(int)> walk = [&](int id) {
        if (id < 0 || static_cast<std::size_t>(id) >= tree.nodes.size() || ++visited > tree.nodes.size()) {
            throw std::invalid_argument("split tree is malformed");
        }
        const auto& node = tree.nodes[static_cast<std::size_t>(id)];
        width = std::max(width, cut_rank(g, node.members));
        if (node.is_leaf()) {
            if (node.members.count() != 1 || node.right >= 0) {
                throw std::invalid_argument("split tree leaf is not a singleton");
            }
            return;
        }
        const auto& l = tree.nodes.at(static_cast<std::size_t>(node.left)).members;
        const auto& r = tree.nodes.at(static_cast<std::size_t>(node.right)).members;
        if (l.empty() || r.empty() || l.intersects(r) || !((l | r) == node.members)) {
            throw std::invalid_argument("split tree node is not split into two disjoint nonempty parts");
        }
        walk(node.left);
        walk(node.right);
    };
    walk(tree.root);
    return width;
}

} // namespace msok
