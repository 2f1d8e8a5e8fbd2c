#include "srdef/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "srdef/numeric.hpp"

namespace srdef {

namespace {

struct Overflow {};

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

template <typename T>
bool is_unit(const T& v) {
    return v == 1 || v == -1;
}

/// Dense fraction-free (Bareiss) rank for whatever survives unit-pivot elimination.
int bareiss_rank(std::vector<std::vector<Int>> a) {
    int rank = 0;
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

/// Sparse elimination with unit pivots; generic over the coefficient type.
template <typename T>
int sparse_rank(const SparseIntMatrix& m) {
    int rank = 0;
    std::vector<std::map<int, T>> col(m.cols);
    std::vector<std::set<int>> row_cols(m.rows);
    std::vector<bool> col_alive(m.cols, false), row_alive(m.rows, true);
    std::set<std::pair<int, int>> by_nnz;  // (nnz, col) for alive columns

    auto touch_col = [&](int c, int old_nnz) {
        int nnz = static_cast<int>(col[c].size());
        if (old_nnz > 0) by_nnz.erase({old_nnz, c});
        if (nnz > 0) {
            by_nnz.insert({nnz, c});
            col_alive[c] = true;
        } else {
            col_alive[c] = false;
        }
    };

    for (int c = 0; c < m.cols; ++c) {
        for (auto [r, v] : m.entries[c]) {
            if (v == 0) continue;
            col[c][r] = T(v);
            row_cols[r].insert(c);
        }
        touch_col(c, 0);
    }

    while (!by_nnz.empty()) {
        // sparsest column holding a unit entry; within it, the unit entry
        // whose row meets the fewest columns
        int best_c = -1, best_r = -1;
        for (const auto& [nnz, c] : by_nnz) {
            std::size_t best_row_deg = 0;
            for (const auto& [r, v] : col[c]) {
                if (!is_unit(v)) continue;
                if (best_r < 0 || row_cols[r].size() < best_row_deg) {
                    best_row_deg = row_cols[r].size();
                    best_c = c;
                    best_r = r;
                }
            }
            if (best_r >= 0) break;
        }
        if (best_c < 0) break;  // no unit entries anywhere

        T pivot = col[best_c][best_r];  // ±1
        std::vector<int> touched(row_cols[best_r].begin(), row_cols[best_r].end());
        for (int c2 : touched) {
            if (c2 == best_c) continue;
            auto it = col[c2].find(best_r);
            if (it == col[c2].end()) continue;
            T factor = it->second;
            if (pivot == T(-1)) factor = -factor;
            int old_nnz = static_cast<int>(col[c2].size());
            // col[c2] -= factor * col[best_c]
            for (const auto& [r, v] : col[best_c]) {
                auto jt = col[c2].find(r);
                T delta;
                if constexpr (std::is_same_v<T, long long>) {
                    delta = checked_mul(factor, v);
                } else {
                    delta = factor * v;
                }
                if (jt == col[c2].end()) {
                    col[c2][r] = -delta;
                    row_cols[r].insert(c2);
                } else {
                    if constexpr (std::is_same_v<T, long long>) {
                        jt->second = checked_sub(jt->second, delta);
                    } else {
                        jt->second -= delta;
                    }
                    if (jt->second == 0) {
                        col[c2].erase(jt);
                        row_cols[r].erase(c2);
                    }
                }
            }
            touch_col(c2, old_nnz);
        }
        // retire pivot column and row
        {
            int old_nnz = static_cast<int>(col[best_c].size());
            for (const auto& [r, v] : col[best_c]) row_cols[r].erase(best_c);
            col[best_c].clear();
            touch_col(best_c, old_nnz);
        }
        for (int c2 : std::vector<int>(row_cols[best_r].begin(), row_cols[best_r].end())) {
            int old_nnz = static_cast<int>(col[c2].size());
            col[c2].erase(best_r);
            touch_col(c2, old_nnz);
        }
        row_cols[best_r].clear();
        row_alive[best_r] = false;
        ++rank;
    }

    // Whatever is left has no ±1 entries; hand it to Bareiss.
    std::vector<int> live_rows, live_cols;
    std::unordered_map<int, int> row_map;
    for (int c = 0; c < m.cols; ++c)
        if (col_alive[c]) live_cols.push_back(c);
    if (!live_cols.empty()) {
        for (int c : live_cols)
            for (const auto& [r, v] : col[c])
                if (row_alive[r] && !row_map.count(r)) {
                    row_map[r] = static_cast<int>(live_rows.size());
                    live_rows.push_back(r);
                }
        std::vector<std::vector<Int>> dense(live_rows.size(), std::vector<Int>(live_cols.size(), 0));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& [r, v] : col[live_cols[j]])
                if (row_alive[r]) dense[row_map[r]][j] = Int(v);
        rank += bareiss_rank(std::move(dense));
    }
    return rank;
}

}  // namespace

int exact_rank(const SparseIntMatrix& m) {
    try {
        return sparse_rank<long long>(m);
    } catch (const Overflow&) {
        return sparse_rank<Int>(m);
    }
}

}  // namespace srdef
