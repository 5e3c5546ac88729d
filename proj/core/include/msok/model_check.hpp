#pragma once

#include "msok/formula.hpp"
#include "msok/graph.hpp"

#include <span>
#include <vector>

namespace msok {

/// A graph with values for the free set variables of a formula, in order.
struct Interpretation {
    const Graph* graph = nullptr;
    std::vector<VertexSet> sets;
};

/// Brute-force MSO1 evaluation: vertex quantifiers range over the n vertices,
/// set quantifiers over all 2^n subsets. Derived connectives are evaluated
/// directly. Throws std::invalid_argument on arity or universe mismatch and
/// CapExceeded for graphs above 64 vertices.
bool model_check(const Interpretation& interp, const Formula& f);
bool model_check(const Graph& g, const Formula& f, std::span<const VertexSet> sets = {});

} // namespace msok
