#include "msok/annotation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

namespace msok {

std::string to_string(Direction d) { return d == Direction::AtMost ? "<=" : ">="; }

std::optional<Direction> parse_direction(std::string_view text)
{
    if (text == "le" || text == "<=") {
        return Direction::AtMost;
    }
    if (text == "ge" || text == ">=") {
        return Direction::AtLeast;
    }
    return std::nullopt;
}

void Annotation::validate(std::size_t n) const
{
    std::map<std::pair<std::string, std::string>, std::uint64_t> seen;
    for (const auto& t : triples) {
        if (t.x.universe() != n || t.y.universe() != n) {
            throw std::invalid_argument("annotation triple over a different vertex set");
        }
        if (t.x.intersects(t.y)) {
            throw std::invalid_argument("annotation triple " + t.x.to_string() + " | " + t.y.to_string()
                                        + " has overlapping sides");
        }
        auto [it, fresh] = seen.try_emplace({t.x.to_string(), t.y.to_string()}, t.w);
        if (!fresh && it->second != t.w) {
            throw std::invalid_argument("annotation has two weights for " + t.x.to_string() + " | "
                                        + t.y.to_string());
        }
    }
}

std::uint64_t annotation_value(const Annotation& a, const VertexSet& z)
{
    std::uint64_t total = 0;
    for (const auto& t : a.triples) {
        if (t.x.is_subset_of(z) && !t.y.intersects(z)) {
            total += t.w;
        }
    }
    return total;
}

Annotation trivial_annotation(std::size_t n)
{
    Annotation a;
    for (Vertex v = 0; v < n; ++v) {
        a.triples.push_back({VertexSet(n, {v}), VertexSet(n), 1});
    }
    return a;
}

std::uint64_t encoding_bits(const Annotation& a)
{
    std::uint64_t bits = 0;
    for (const auto& t : a.triples) {
        bits += t.x.count() + t.y.count() + static_cast<std::uint64_t>(std::max(1, static_cast<int>(std::bit_width(t.w))));
    }
    return bits;
}

} // namespace msok
