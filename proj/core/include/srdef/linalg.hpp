#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace srdef {

/// Column-major sparse integer matrix for exact rank computation.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    // entries[c] = list of (row, value), rows distinct within a column
    std::vector<std::vector<std::pair<int, long long>>> entries;
};

/// Exact rank over the rationals. Eliminates with unit pivots while possible
/// (integer-preserving), then finishes any remainder with fraction-free
/// Bareiss elimination over big integers. Falls back to big-integer arithmetic
/// wholesale if 64-bit intermediate values overflow.
int exact_rank(const SparseIntMatrix& m);

}  // namespace srdef
