#include "msok/enumerate.hpp"

#include "msok/errors.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace msok {

Graph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    if (n > max_mask_order) {
        throw std::invalid_argument("graph_from_mask: order above " + std::to_string(max_mask_order));
    }
    Graph g(n);
    for (unsigned j = 1; j < n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
            if (((mask >> pair_bit(i, j)) & 1U) != 0) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::uint64_t upper_mask(const Graph& g)
{
    if (g.order() > max_mask_order) {
        throw std::invalid_argument("upper_mask: order above " + std::to_string(max_mask_order));
    }
    std::uint64_t mask = 0;
    for (unsigned j = 1; j < g.order(); ++j) {
        for (unsigned i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) {
                mask |= std::uint64_t{1} << pair_bit(i, j);
            }
        }
    }
    return mask;
}

namespace {

std::uint64_t relabeled(const std::vector<std::uint64_t>& adj, const std::vector<unsigned>& perm)
{
    std::uint64_t mask = 0;
    for (unsigned j = 1; j < perm.size(); ++j) {
        for (unsigned i = 0; i < j; ++i) {
            if (((adj[perm[i]] >> perm[j]) & 1U) != 0) {
                mask |= std::uint64_t{1} << pair_bit(i, j);
            }
        }
    }
    return mask;
}

// True when no relabeling of the graph gives a smaller mask.
bool is_smallest(std::size_t n, std::uint64_t mask)
{
    const auto adj = adjacency_masks(graph_from_mask(n, mask));
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        if (relabeled(adj, perm) < mask) {
            return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

} // namespace

std::uint64_t canonical_mask(const Graph& g)
{
    if (g.order() > 9) {
        throw CapExceeded("canonical_mask supports at most 9 vertices");
    }
    const auto adj = adjacency_masks(g);
    std::vector<unsigned> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0U);
    std::uint64_t best = upper_mask(g);
    do {
        best = std::min(best, relabeled(adj, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

void enumerate_graphs(std::size_t max_n, const std::function<bool(const Graph&)>& visit)
{
    if (max_n > max_mask_order) {
        throw std::invalid_argument("enumerate_graphs: order above " + std::to_string(max_mask_order));
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        const std::uint64_t end = pairs == 64 ? 0 : std::uint64_t{1} << pairs;
        std::uint64_t mask = 0;
        do {
            if (!visit(graph_from_mask(n, mask))) {
                return;
            }
            ++mask;
        } while (mask != end);
    }
}

const std::vector<std::uint64_t>& isomorphism_classes(std::size_t n)
{
    constexpr std::size_t limit = 7;
    if (n > limit) {
        throw CapExceeded("isomorphism class catalog supports at most " + std::to_string(limit) + " vertices");
    }
    static std::array<std::vector<std::uint64_t>, limit + 1> catalog;
    static std::array<std::once_flag, limit + 1> once;
    std::call_once(once[n], [n] {
        const std::uint64_t end = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < end; ++mask) {
            if (is_smallest(n, mask)) {
                catalog[n].push_back(mask);
            }
        }
    });
    return catalog[n];
}

} // namespace msok
