// Matrix positions. A Cell is a (row, col) pair with 1-based indices; it
// names both a position in the ambient matrix and the indeterminate
// x[row,col] sitting there.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ladet {

struct Cell {
    int row = 0;
    int col = 0;

    // Row-major order, used for storing cell sets. Not the term order.
    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
    return "x[" + std::to_string(c.row) + "," + std::to_string(c.col) + "]";
}

// The variable order under the skew-diagonal lexicographic term order:
// x[d,c] < x[b,a] when b < d, or b = d and a > c. Smaller rows win, and
// within a row larger columns win, so the top-right entry is largest.
inline std::strong_ordering var_compare(const Cell& u, const Cell& v) {
    if (u.row != v.row) return v.row <=> u.row;
    return u.col <=> v.col;
}

inline bool var_less(const Cell& u, const Cell& v) {
    return var_compare(u, v) < 0;
}

} // namespace ladet
