#pragma once

#include <array>
#include <string>
#include <vector>

#include "srdef/complex.hpp"

namespace srdef {

/// A diagonal of the n-gon with cyclic vertex indices, normalized 1 <= i < j <= n,
/// non-adjacent: j - i >= 2 and (i, j) != (1, n).
struct Diagonal {
    int i = 0, j = 0;
    bool operator==(const Diagonal&) const = default;
    auto operator<=>(const Diagonal&) const = default;
};

Diagonal make_diagonal(int n, int a, int b);
bool crossing(const Diagonal& a, const Diagonal& b);
std::string diagonal_label(const Diagonal& d);

/// The boundary complex of the dual of the (n-4)-dimensional associahedron:
/// vertices are the diagonals of the n-gon, faces the non-crossing sets.
struct AssocComplex {
    int n = 0;
    SimplicialComplex complex;
};

AssocComplex assoc_build(int n);

/// Polygon sizes of the partition cut out by a face (a set of pairwise
/// non-crossing diagonals); also checks that the link of the face is the join
/// of the corresponding smaller dual associahedra.
std::vector<int> link_decomposition(int n, const std::vector<Diagonal>& face);

/// The complex B_ij * B_jk * B_kl * B_li attached to a crossing pair
/// {δ_ik, δ_jl}; a ball of dimension n-5 equal to L_b of the crossing pair.
SimplicialComplex l_b_structure(int n, const Diagonal& d1, const Diagonal& d2);

/// First-order deformation basis of the ring of the complex joined with Δ_m,
/// as rational monomials (numerator/denominator variable labels).
struct T1BasisElement {
    std::vector<std::string> numerator;    // two labels
    std::vector<std::string> denominator;  // two labels
    bool operator==(const T1BasisElement&) const = default;
    auto operator<=>(const T1BasisElement&) const = default;
};

struct T1Basis {
    std::array<std::vector<T1BasisElement>, 4> sets;
    long long total() const {
        long long t = 0;
        for (const auto& s : sets) t += static_cast<long long>(s.size());
        return t;
    }
};

/// The four families for the n-gon complex joined with Δ_m (m = -1 allowed).
/// Simplex vertices are labeled y0..ym.
T1Basis t1_basis(int n, int m);

/// Unstarring plan: remove the diagonals D_{n,r} = {δ_ij : 3 <= i <= r-1,
/// r+1 <= j <= n} in an order compatible with the splitting proof, turning
/// the n-gon complex into the join for (r, s), r + s = n + 3.
struct UnstarPlan {
    int n = 0, r = 0;
    std::vector<Diagonal> order;  // unstar sequence, first element first
};

UnstarPlan default_unstar_plan(int n, int r);

/// Runs the plan; element 0 is the starting complex, later entries follow each
/// unstarring. Throws UnstarBlocked if a link fails to factor.
std::vector<SimplicialComplex> unstar_sequence(const UnstarPlan& plan);

/// Iterated splitting realizing the join of the Σr_i = n + 3(m-1) partition;
/// returns every intermediate complex (starting complex first). With all
/// r_i = 4 the terminal complex is the boundary of the hyperoctahedron.
std::vector<SimplicialComplex> hyperoct_chain(const std::vector<int>& rs);

/// Successively star vertices eps_k (4 <= k <= n-2) into the edges
/// {δ_13, δ_kn}; returns the n-4 complexes after each starring.
std::vector<SimplicialComplex> c_n_series(int n);

}  // namespace srdef
