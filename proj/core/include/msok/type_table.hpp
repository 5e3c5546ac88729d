#pragma once

#include "msok/game.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

namespace msok {

using TypeId = std::uint32_t;

/// Interned rank-q MSO types of graphs with tuples of sets. Two
/// interpretations get the same id from one table exactly when they have the
/// same type. A type of rank r is identified by its atomic type together with
/// the rank r-1 types of all one-move extensions. Not thread-safe.
class TypeTable {
public:
    explicit TypeTable(GameLimits limits = {}) : limits_(limits) {}

    /// Throws CapExceeded outside the limits and std::invalid_argument for a
    /// negative q or a set over the wrong universe.
    TypeId type_of(const Graph& g, std::span<const VertexSet> sets, int q);

    std::size_t size() const noexcept { return ids_.size(); }
    const GameLimits& limits() const noexcept { return limits_; }

private:
    TypeId intern(std::string key);

    GameLimits limits_;
    std::unordered_map<std::string, TypeId> ids_;

    friend class TypeBuilder;
};

} // namespace msok
