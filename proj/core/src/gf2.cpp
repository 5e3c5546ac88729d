#include "msok/gf2.hpp"

#include <algorithm>
#include <cstddef>

namespace msok::gf2 {

int rank(std::span<std::uint64_t> rows)
{
    // basis[b] holds a reduced row whose highest set bit is b.
    std::uint64_t basis[64] = {};
    int r = 0;
    for (std::uint64_t row : rows) {
        while (row != 0) {
            const int hb = 63 - __builtin_clzll(row);
            if (basis[hb] == 0) {
                basis[hb] = row;
                ++r;
                break;
            }
            row ^= basis[hb];
        }
    }
    return r;
}

int rank(std::vector<std::vector<std::uint64_t>>& rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t words = rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t w = 0; w < words && pivot_row < rows.size(); ++w) {
        for (int b = 0; b < 64 && pivot_row < rows.size(); ++b) {
            const std::uint64_t bit = std::uint64_t{1} << b;
            std::size_t found = pivot_row;
            while (found < rows.size() && (rows[found][w] & bit) == 0) {
                ++found;
            }
            if (found == rows.size()) {
                continue;
            }
            std::swap(rows[pivot_row], rows[found]);
            const auto& p = rows[pivot_row];
            for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if ((rows[i][w] & bit) != 0) {
                    for (std::size_t k = w; k < words; ++k) {
                        rows[i][k] ^= p[k];
                    }
                }
            }
            ++pivot_row;
        }
    }
    return static_cast<int>(pivot_row);
}

} // namespace msok::gf2
