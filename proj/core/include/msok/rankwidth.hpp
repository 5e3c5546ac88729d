#pragma once

#include "msok/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace msok {

inline constexpr std::size_t default_rank_width_cap = 16;

/// Rooted binary split tree: every internal node's members are the disjoint
/// union of its children's members, leaves are singletons, and the root holds
/// all vertices. Unrooting it (and suppressing the root) gives a
/// rank-decomposition.
struct SplitTree {
    struct Node {
        VertexSet members;
        int left = -1;
        int right = -1;

        bool is_leaf() const noexcept { return left < 0; }
    };

    std::vector<Node> nodes;
    int root = -1;
};

struct RankWidthResult {
    int width = 0;
    std::optional<SplitTree> witness;
};

struct RankWidthOptions {
    std::size_t max_vertices = default_rank_width_cap;
    bool with_witness = true;
};

/// Exact rank-width by dynamic programming over vertex subsets, O(3^n).
/// Among optimal splits of a subset the one whose part containing the
/// smallest vertex has the smallest bitmask is kept. Throws CapExceeded when
/// the graph has more than options.max_vertices vertices.
RankWidthResult rank_width(const Graph& g, RankWidthOptions options = {});

/// rank_width(g).width <= d, searched top-down and abandoning every split
/// with a cut of rank above d.
bool rank_width_at_most(const Graph& g, int d, std::size_t max_vertices = default_rank_width_cap);

/// Largest cut-rank over the members of every node of the tree. Throws
/// std::invalid_argument when the tree is not a valid split tree of g.
int split_tree_width(const Graph& g, const SplitTree& tree);

} // namespace msok
