#pragma once

#include "msok/annotation.hpp"
#include "msok/formula.hpp"
#include "msok/game.hpp"
#include "msok/graph.hpp"
#include "msok/modules.hpp"
#include "msok/rankwidth.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace msok {

struct KernelConfig {
    std::size_t rw_cap = default_rank_width_cap;
    /// Largest module whose type is computed, and the highest type rank.
    GameLimits game{};
    /// Largest representative searched for.
    std::size_t rep_cap = 6;
    /// Largest module whose subsets are searched by kernelize_opt.
    std::size_t opt_cap = 15;
};

/// First graph in enumeration order with at most config.rep_cap vertices,
/// rank-width at most d and the same rank-q type as h. Throws CapExceeded
/// when there is none within the cap or h is too large for type computation.
Graph find_representative(const Graph& h, int q, int d, const KernelConfig& config = {});

/// A kernel with its module map: class i of the original cover became
/// kernel module i. Kernel vertices are numbered module by module and
/// labelled "<class>:<local>", both 1-based.
struct McKernel {
    Graph graph;
    std::vector<VertexSet> classes;
    std::vector<VertexSet> modules;
    int q = 0;
    int d = 0;
};

/// Replaces every class of the rank-width-d cover by a representative of the
/// same rank-q type, q = quantifier_rank(phi). Representatives of adjacent
/// classes are joined completely. phi must be a sentence.
McKernel kernelize_mc(const Graph& g, const Formula& phi, int d, const KernelConfig& config = {});

struct AnnotatedInstance {
    Graph graph;
    Annotation annotation;
    std::int64_t r = 0;
    Direction direction = Direction::AtMost;
    /// Original cover classes; empty when read back from a document.
    std::vector<VertexSet> classes;
    std::vector<VertexSet> modules;
};

/// Annotated kernel for optimizing |X| subject to phi(X), phi with exactly
/// one free set variable. Representatives have the same rank-(q+1) type as
/// their classes. For each module U' and subset W' of it, the triple
/// (W', U' \ W', |W*|) records the smallest (largest for AtLeast) W* in the
/// class whose rank-q type with W* matches that of U' with W'. Triples of
/// weight 0 are left out.
AnnotatedInstance kernelize_opt(const Graph& g, const Formula& phi, Direction direction, std::int64_t r, int d,
                                const KernelConfig& config = {});

inline constexpr std::size_t default_solve_cap = 20;

/// Brute force: min or max |S| over all S with g |= phi(S); nullopt when no
/// S qualifies. Throws CapExceeded above max_vertices.
std::optional<std::uint64_t> solve_opt(const Graph& g, const Formula& phi, Direction direction,
                                       std::size_t max_vertices = default_solve_cap);

/// Brute force on the kernel: min or max W(Z) over all Z with G' |= phi(Z).
std::optional<std::uint64_t> solve_annotated(const AnnotatedInstance& a, const Formula& phi,
                                             std::size_t max_vertices = default_solve_cap);

/// Whether an optimum meets the threshold r in the given direction.
bool meets_threshold(const std::optional<std::uint64_t>& optimum, Direction direction, std::int64_t r);

} // namespace msok
