#pragma once

#include <functional>

#include "srdef/complex.hpp"

namespace srdef {

/// Homology of the geometric model of a pair of upward-closed face sets
/// A ⊆ U of a complex K:
///   - the space of U is the order complex of the poset (U \ {∅}, ⊂), coned
///     with one apex exactly when ∅ ∈ U;
///   - relative cells are the chains not lying entirely inside A's model.
/// Computes dim H_0 and H_1 over the rationals, which match the cohomology of
/// the pair in those degrees. When `reduced` is set (single-vertex degrees),
/// A must be empty and the absolute reduced homology of U's model is returned.
struct PairHomology {
    long long h0 = 0;
    long long h1 = 0;
};

PairHomology pair_model_homology(const SimplicialComplex& k,
                                 const std::function<bool(Mask)>& in_u,
                                 const std::function<bool(Mask)>& in_a, bool empty_in_u,
                                 bool reduced);

}  // namespace srdef
