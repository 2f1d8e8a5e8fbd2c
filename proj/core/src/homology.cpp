#include "srdef/homology.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "complex_cache.hpp"
#include "srdef/linalg.hpp"

namespace srdef {

namespace {

/// Boundary matrix ∂_d : C_d -> C_{d-1}; for d = 0 the augmentation row.
SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    SparseIntMatrix m;
    const auto& cells = k.faces_of_dim(d);
    m.cols = static_cast<int>(cells.size());
    if (d == 0) {
        m.rows = 1;
        m.entries.assign(m.cols, {});
        for (int c = 0; c < m.cols; ++c) m.entries[c].push_back({0, 1});
        return m;
    }
    const auto& below = k.faces_of_dim(d - 1);
    m.rows = static_cast<int>(below.size());
    std::unordered_map<Mask, int> index;
    index.reserve(below.size() * 2);
    for (int i = 0; i < m.rows; ++i) index[below[i]] = i;
    m.entries.assign(m.cols, {});
    for (int c = 0; c < m.cols; ++c) {
        Mask f = cells[c];
        int sign = 1;
        for_bits(f, [&](int v) {
            Mask g = f & ~(Mask(1) << v);
            m.entries[c].push_back({index.at(g), sign});
            sign = -sign;
        });
    }
    return m;
}

}  // namespace

BettiVector reduced_betti(const SimplicialComplex& k) {
    int d = k.dim();
    if (d < 0) return {};
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        if (k.cache()->betti_done) return k.cache()->betti;
    }
    std::vector<int> rank(d + 2, 0);  // rank[i] = rank ∂_i, i = 0..d (rank[d+1] = 0)
    for (int i = 0; i <= d; ++i) rank[i] = exact_rank(boundary_matrix(k, i));
    BettiVector b(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long n = static_cast<long long>(k.faces_of_dim(i).size());
        b[i] = n - rank[i] - rank[i + 1];
    }
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        k.cache()->betti = b;
        k.cache()->betti_done = true;
    }
    return b;
}

bool has_sphere_homology(const SimplicialComplex& k, int d) {
    if (d < 0) return k.dim() == -1;  // {∅} plays the role of S^{-1}
    BettiVector b = reduced_betti(k);
    if (static_cast<int>(b.size()) != d + 1) return false;
    for (int i = 0; i < d; ++i)
        if (b[i] != 0) return false;
    return b[d] == 1;
}

bool is_homology_sphere(const SimplicialComplex& k) { return is_homology_sphere(k, k.dim()); }

bool is_homology_sphere(const SimplicialComplex& k, int d) {
    if (k.dim() != d) return false;
    if (d < 0) return true;
    if (!k.pure()) throw NotPure("is_homology_sphere needs a pure complex");
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        if (k.cache()->homsph_done) return k.cache()->homsph;
    }
    bool ok = true;
    // Euler characteristic from the f-vector must match the sphere value.
    if (k.f_vector().euler() != (d % 2 == 0 ? 2 : 0)) ok = false;
    if (ok && !has_sphere_homology(k, d)) ok = false;
    for (int fd = 0; ok && fd <= d; ++fd) {
        for (Mask f : k.faces_of_dim(fd)) {
            if (!has_sphere_homology(k.link(f), d - fd - 1)) {
                ok = false;
                break;
            }
        }
    }
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        k.cache()->homsph = ok;
        k.cache()->homsph_done = true;
    }
    return ok;
}

}  // namespace srdef
