#pragma once

#include <string>
#include <vector>

#include "srdef/complex.hpp"

namespace srdef {

/// The upward-closed face sets controlling the graded pieces in degrees -b,
/// stored through their complementary subcomplexes.
struct USets {
    Mask b = 0;
    bool empty_in_u = false;  // ∅ ∈ U_b, i.e. b is not a face
    bool u_equals_ut = false;
    std::vector<Mask> complement_u_facets;   // facets of K \ U_b (∅ or closed star of b)
    std::vector<Mask> complement_ut_facets;  // facets of K \ Ũ_b
};

USets u_sets(const SimplicialComplex& k, Mask b);

/// L_b: intersection of links of all proper subsets of b.
SimplicialComplex l_b(const SimplicialComplex& k, Mask b);

/// dim H^{i-1} of the pair of models for (U_b, Ũ_b); reduced when |b| = 1.
long long relative_pair_cohomology(const SimplicialComplex& k, Mask b, int i);

/// Graded piece T^i in degree a - b, reduced through the link of a.
/// Returns 0 whenever the vanishing conditions hold.
long long t_piece(const SimplicialComplex& k, int i, Mask a, Mask b);

struct CandidatePair {
    Mask a = 0;
    Mask b = 0;
    bool b_is_face = false;
};

/// Support pairs that can carry a nonzero piece: for every face a, the b's
/// over link(a) are single vertices, faces, and minimal non-faces. Everything
/// else has U_b = Ũ_b.
std::vector<CandidatePair> candidate_pairs(const SimplicialComplex& k);

struct PieceEntry {
    std::vector<std::string> a;  // vertex labels of the support face a
    std::vector<std::string> b;
    long long dim = 0;
};

struct CotangentCertificate {
    int order = 2;  // which T^i
    std::string complex_hash;
    bool all_zero = true;
    long long degree0_dim = 0;
    long long total_dim = 0;          // sum of piece dims over listed pairs
    long long face_pairs_skipped = 0; // candidates with b a face of a flag link (provably zero)
    std::vector<PieceEntry> pieces;   // computed pieces, all candidates listed
};

/// Evaluate every candidate piece of T^i. Link factors are evaluated once
/// (joins split across factors) and shared through a global memo table.
CotangentCertificate cotangent_certificate(const SimplicialComplex& k, int order, int jobs = 1);

/// Certificate for T^2 = 0 with the all-zero flag.
CotangentCertificate t2_certificate(const SimplicialComplex& k, int jobs = 1);
bool t2_is_zero(const SimplicialComplex& k, int jobs = 1);

/// Dimension of the degree-0 part of T^1 (the tangent space of the projective
/// scheme for dim >= 3), counting exponent vectors per support pair.
long long t1_degree_zero_dim(const SimplicialComplex& k, int jobs = 1);
long long t2_degree_zero_dim(const SimplicialComplex& k, int jobs = 1);

/// The K3 surface of the hexagon diagonal complex carries one non-algebraic
/// first-order deformation on top of the degree-0 algebraic part. Stored as a
/// constant; no sheaf machinery here.
inline constexpr long long k3_nonalgebraic_t1_contribution = 1;

/// Shortcut for non-edges on homology 3-spheres: rank of H̃_1(L_b).
long long t2_via_h1_lb(const SimplicialComplex& k, Mask b);

/// Nonzero test for T^1 in degree -b on closed-manifold proxies:
/// true iff K equals the join of ∂b with L_b.
bool t1_manifold_nonzero(const SimplicialComplex& k, Mask b);

/// Complement-cohomology formulas valid for flag complexes, used as
/// independent cross-checks of the pair model:
///   b = {v}:      H^1 of the model of |K| minus the closed star of v,
///   b a non-edge: reduced H^0 of the model of |K| minus |∂b * L_b|,
///                 computed by connectivity only (no boundary matrices).
long long t2_flag_vertex_formula(const SimplicialComplex& k, int v);
long long t2_flag_nonedge_formula(const SimplicialComplex& k, Mask b);

}  // namespace srdef
