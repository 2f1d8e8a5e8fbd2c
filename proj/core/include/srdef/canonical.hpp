#pragma once

#include <string>
#include <vector>

#include "srdef/complex.hpp"

namespace srdef {

/// Canonical facet-list serialization, invariant under vertex relabeling.
/// Flag complexes are canonicalized through their edge graph; everything else
/// goes through the vertex/facet incidence graph.
std::string canonical_form(const SimplicialComplex& k);

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// All vertex permutations preserving the face set, as index maps v -> σ(v).
const std::vector<std::vector<int>>& automorphisms(const SimplicialComplex& k);

/// Orbits of the given faces under the automorphism group. Each orbit lists
/// indices into `faces`, ascending; orbits ordered by smallest member.
std::vector<std::vector<int>> face_orbits(const SimplicialComplex& k,
                                          const std::vector<Mask>& faces);

/// FNV-1a 64-bit hash of the canonical form, hex-encoded.
std::string canonical_hash(const SimplicialComplex& k);

}  // namespace srdef
