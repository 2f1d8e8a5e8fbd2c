#include "posetpair.hpp"

#include <unordered_map>

#include "srdef/linalg.hpp"

namespace srdef {

namespace {

struct PairKey {
    Mask f, g;
    bool operator==(const PairKey&) const = default;
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::uint64_t h = k.f * 0x9e3779b97f4a7c15ull;
        h ^= k.g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

PairHomology pair_model_homology(const SimplicialComplex& k,
                                 const std::function<bool(Mask)>& in_u,
                                 const std::function<bool(Mask)>& in_a, bool empty_in_u,
                                 bool reduced) {
    if (reduced && empty_in_u) throw Error("reduced pair model cannot be coned");

    std::vector<Mask> u_faces;
    for (Mask f : k.all_faces())
        if (in_u(f)) u_faces.push_back(f);

    // 0-cells: U\A faces, plus the apex when ∅ ∈ U
    std::unordered_map<Mask, int> cell0;
    int n0 = 0;
    for (Mask f : u_faces)
        if (!in_a(f)) cell0[f] = n0++;
    int apex = -1;
    if (empty_in_u) apex = n0++;

    // 1-cells: chains f ⊂ g not entirely in A; apex chains (apex, f)
    std::unordered_map<PairKey, int, PairKeyHash> cell1;
    std::unordered_map<Mask, int> cell1_apex;
    int n1 = 0;
    SparseIntMatrix d1;
    auto emit_d1 = [&](std::vector<std::pair<int, long long>> col) {
        d1.entries.push_back(std::move(col));
    };
    for (Mask g : u_faces) {
        if (popcount(g) < 2) continue;
        bool g_in_a = in_a(g);
        for_proper_subsets(g, [&](Mask f) {
            if (!in_u(f)) return;
            if (g_in_a && in_a(f)) return;
            cell1[{f, g}] = n1++;
            std::vector<std::pair<int, long long>> col;
            if (!g_in_a) col.push_back({cell0.at(g), 1});
            if (!in_a(f)) col.push_back({cell0.at(f), -1});
            emit_d1(std::move(col));
        });
    }
    if (empty_in_u) {
        for (Mask f : u_faces) {
            cell1_apex[f] = n1++;
            std::vector<std::pair<int, long long>> col;
            if (!in_a(f)) col.push_back({cell0.at(f), 1});
            col.push_back({apex, -1});
            emit_d1(std::move(col));
        }
    }
    d1.rows = n0;
    d1.cols = n1;

    // 2-cells: chains f ⊂ g ⊂ h not entirely in A; apex chains (apex, f ⊂ g)
    SparseIntMatrix d2;
    auto pair_row = [&](Mask f, Mask g) -> int {
        auto it = cell1.find({f, g});
        return it == cell1.end() ? -1 : it->second;
    };
    for (Mask h : u_faces) {
        if (popcount(h) < 3) continue;
        bool h_in_a = in_a(h);
        for_proper_subsets(h, [&](Mask g) {
            if (popcount(g) < 2 || !in_u(g)) return;
            bool g_in_a = in_a(g);
            for_proper_subsets(g, [&](Mask f) {
                if (!in_u(f)) return;
                if (h_in_a && g_in_a && in_a(f)) return;
                std::vector<std::pair<int, long long>> col;
                int r;
                if ((r = pair_row(g, h)) >= 0) col.push_back({r, 1});
                if ((r = pair_row(f, h)) >= 0) col.push_back({r, -1});
                if ((r = pair_row(f, g)) >= 0) col.push_back({r, 1});
                d2.entries.push_back(std::move(col));
            });
        });
    }
    if (empty_in_u) {
        for (Mask g : u_faces) {
            if (popcount(g) < 2) continue;
            for_proper_subsets(g, [&](Mask f) {
                if (!in_u(f)) return;
                std::vector<std::pair<int, long long>> col;
                int r;
                if ((r = pair_row(f, g)) >= 0) col.push_back({r, 1});
                col.push_back({cell1_apex.at(g), -1});
                col.push_back({cell1_apex.at(f), 1});
                d2.entries.push_back(std::move(col));
            });
        }
    }
    d2.rows = n1;
    d2.cols = static_cast<int>(d2.entries.size());

    int r1 = exact_rank(d1);
    int r2 = exact_rank(d2);

    PairHomology out;
    long long h0 = static_cast<long long>(n0) - r1;
    if (reduced && n0 > 0) h0 -= 1;
    out.h0 = h0;
    out.h1 = static_cast<long long>(n1) - r1 - r2;
    return out;
}

}  // namespace srdef
