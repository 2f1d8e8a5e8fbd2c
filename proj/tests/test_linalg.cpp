#include <doctest.h>

#include <random>
#include <vector>

#include "srdef/linalg.hpp"
#include "srdef/numeric.hpp"

using namespace srdef;

namespace {

SparseIntMatrix make(int rows, const std::vector<std::vector<long long>>& cols) {
    SparseIntMatrix m;
    m.rows = rows;
    m.cols = static_cast<int>(cols.size());
    for (const auto& c : cols) {
        std::vector<std::pair<int, long long>> col;
        for (int r = 0; r < rows; ++r)
            if (c[r] != 0) col.push_back({r, c[r]});
        m.entries.push_back(col);
    }
    return m;
}

int rational_rank(int rows, std::vector<std::vector<long long>> cols) {
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < rows; ++r) a[r][c] = cols[c][r];
    int rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols.size() && rr < a.size(); ++c) {
        std::size_t p = rr;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rr]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rr || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[rr][c];
            for (std::size_t j = c; j < cols.size(); ++j) a[i][j] -= f * a[rr][j];
        }
        ++rr;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rank without unit pivots falls through to fraction-free elimination") {
    // every entry even: the unit-pivot stage never fires
    CHECK(exact_rank(make(2, {{2, 6}, {4, 8}})) == 2);
    CHECK(exact_rank(make(2, {{2, 4}, {4, 8}})) == 1);
    CHECK(exact_rank(make(3, {{2, 0, 2}, {0, 2, 2}, {2, 2, 4}})) == 2);
}

TEST_CASE("rank matches a dense rational oracle on random matrices") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + trial % 7, cols_n = 1 + (trial * 3) % 8;
        std::vector<std::vector<long long>> cols(cols_n, std::vector<long long>(rows));
        for (auto& c : cols)
            for (auto& x : c) x = 2 * val(rng);  // even entries force the dense path
        CHECK(exact_rank(make(rows, cols)) == rational_rank(rows, cols));
        for (auto& c : cols)
            for (auto& x : c) x = val(rng);  // mixed entries use unit pivots
        CHECK(exact_rank(make(rows, cols)) == rational_rank(rows, cols));
    }
}

TEST_CASE("rank survives large entries") {
    long long big = 1LL << 40;
    CHECK(exact_rank(make(2, {{big, big}, {big, -big}})) == 2);
    CHECK(exact_rank(make(2, {{big, big}, {big, big}})) == 1);
}
