#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "srdef/errors.hpp"

namespace srdef {

/// A face is a bitset over the vertex indices of its complex. The empty face is 0.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

/// Iterate set bits of a mask.
template <typename F>
void for_bits(Mask m, F f) {
    while (m) {
        int i = __builtin_ctzll(m);
        f(i);
        m &= m - 1;
    }
}

/// Iterate all nonempty proper subsets of a mask.
template <typename F>
void for_proper_subsets(Mask m, F f) {
    for (Mask s = (m - 1) & m; s; s = (s - 1) & m) f(s);
}

/// Face counts per dimension, counts[i] = number of (i-1)-dimensional faces,
/// so counts[0] = 1 accounts for the empty face.
struct FVector {
    std::vector<long long> counts;

    long long euler() const {
        long long chi = 0;
        for (std::size_t i = 1; i < counts.size(); ++i)
            chi += (i % 2 ? counts[i] : -counts[i]);
        return chi;
    }
    bool operator==(const FVector&) const = default;
};

namespace detail {
struct ComplexCache;
}

/// An abstract simplicial complex held as its set of inclusion-maximal faces.
/// Values are immutable after construction; every operation returns a new complex.
class SimplicialComplex {
public:
    SimplicialComplex();  // the complex {∅} on no vertices

    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
    static SimplicialComplex from_facet_masks(std::vector<std::string> labels,
                                              const std::vector<Mask>& facets);

    /// Δ_m on m+1 fresh vertices; m = -1 gives {∅}.
    static SimplicialComplex simplex(int m, const std::string& prefix = "s");
    /// ∂Δ_{m}, the boundary of the m-simplex (a combinatorial (m-1)-sphere).
    static SimplicialComplex boundary_simplex(int m, const std::string& prefix = "p");
    /// Two vertices, no edge.
    static SimplicialComplex two_points(const std::string& a, const std::string& b);
    /// Boundary of an n-gon (cycle) for n >= 3.
    static SimplicialComplex cycle(int n, const std::string& prefix = "c");
    /// Clique complex of a simple graph.
    static SimplicialComplex clique_complex(const std::vector<std::string>& labels,
                                            const std::vector<std::pair<int, int>>& edges,
                                            int max_dim = 32);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Mask>& facets() const { return facets_; }
    Mask full_mask() const;
    int dim() const;  // -1 for {∅}
    bool pure() const;

    int index_of(const std::string& label) const;  // -1 if absent
    Mask face_mask(const std::vector<std::string>& vertex_labels) const;
    std::vector<std::string> face_labels(Mask f) const;

    bool contains(Mask f) const;
    bool same_faces(const SimplicialComplex& other) const;  // equality as labeled complexes

    /// All faces of dimension d (d >= 0); lazily enumerated and cached.
    const std::vector<Mask>& faces_of_dim(int d) const;
    /// All nonempty faces, ascending by dimension then mask.
    std::vector<Mask> all_faces() const;
    const std::unordered_set<Mask>& face_set() const;
    FVector f_vector() const;

    SimplicialComplex link(Mask f) const;
    SimplicialComplex closed_star(Mask f) const;
    std::vector<Mask> open_star(Mask f) const;
    long long valency(Mask f) const;

    /// Stellar subdivision at the face f (dim f >= 1) with a fresh vertex label.
    SimplicialComplex star_face(Mask f, const std::string& fresh_label) const;

    /// General stellar exchange: requires link(a) = ∂b * L with b not a face of link(a).
    /// b is given by labels; labels absent from the complex are created fresh
    /// (|b| = 1 with a fresh label is exactly star_face).
    SimplicialComplex flip(Mask a, const std::vector<std::string>& b_labels) const;

    bool is_flag() const;
    const std::vector<Mask>& minimal_nonfaces() const;
    std::vector<std::pair<int, int>> edge_graph() const;

    /// Join factors of a flag complex: connected components of the complement
    /// of the edge graph. Returns {*this} when the complex is not flag or connected.
    std::vector<SimplicialComplex> flag_join_factors() const;

    /// Restriction to a vertex subset (faces contained in the subset).
    SimplicialComplex restrict_to(Mask vertex_subset) const;

    std::shared_ptr<detail::ComplexCache> cache() const { return cache_; }

private:
    std::vector<std::string> labels_;
    std::vector<Mask> facets_;  // sorted, inclusion-maximal
    std::shared_ptr<detail::ComplexCache> cache_;

    void init_cache();
};

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// L_b = intersection of link(b') over all proper subsets b' of b.
/// Defined when b is a face, or b is a non-face with ∂b contained in the complex.
SimplicialComplex l_b_complex(const SimplicialComplex& k, Mask b);

bool boundary_in_complex(const SimplicialComplex& k, Mask b);

}  // namespace srdef
