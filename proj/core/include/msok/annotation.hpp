#pragma once

#include "msok/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msok {

/// Optimization direction: minimize (<=) or maximize (>=) the objective.
enum class Direction { AtMost, AtLeast };

std::string to_string(Direction d);
/// Accepts "le", "<=", "ge" and ">=". Returns nullopt for anything else.
std::optional<Direction> parse_direction(std::string_view text);

struct AnnotationTriple {
    VertexSet x;
    VertexSet y;
    std::uint64_t w = 0;
};

/// Weighted triples (X, Y, w) with X and Y disjoint. W(Z) sums w over the
/// triples with X inside Z and Y outside Z.
struct Annotation {
    std::vector<AnnotationTriple> triples;

    /// Throws std::invalid_argument when a triple has X and Y overlapping, a
    /// universe other than n, or when one (X, Y) pair carries two weights.
    void validate(std::size_t n) const;
};

std::uint64_t annotation_value(const Annotation& a, const VertexSet& z);

/// {({v}, {}, 1) : v in V}, under which W(Z) = |Z|.
Annotation trivial_annotation(std::size_t n);

/// Bits to write the triples down: per triple |X| + |Y| membership bits
/// plus the binary length of w.
std::uint64_t encoding_bits(const Annotation& a);

} // namespace msok
