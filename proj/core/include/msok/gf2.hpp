#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace msok::gf2 {

/// Rank over GF(2) of a matrix with at most 64 columns, one row per word.
/// Rows are reduced in place.
int rank(std::span<std::uint64_t> rows);

/// Rank over GF(2) of a matrix whose rows are multi-word bit vectors of
/// equal length. Rows are reduced in place.
int rank(std::vector<std::vector<std::uint64_t>>& rows);

} // namespace msok::gf2
