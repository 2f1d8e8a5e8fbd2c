#pragma once

#include <vector>

#include "srdef/complex.hpp"

namespace srdef {

/// Ranks of reduced rational homology in dimensions 0..dim(K).
/// Computed from exact ranks of the simplicial boundary matrices.
/// For K = {∅} the result is empty.
using BettiVector = std::vector<long long>;

BettiVector reduced_betti(const SimplicialComplex& k);

/// True iff K is pure d-dimensional and K together with every face link has
/// the reduced homology of a sphere of the appropriate dimension, with the
/// Euler characteristics from the f-vectors agreeing. Throws NotPure when K
/// is not pure. A desk-scale stand-in for sphere recognition.
bool is_homology_sphere(const SimplicialComplex& k);
bool is_homology_sphere(const SimplicialComplex& k, int d);

/// Reduced homology ranks equal those of S^d (d >= -1; d = -1 means K = {∅}).
bool has_sphere_homology(const SimplicialComplex& k, int d);

}  // namespace srdef
