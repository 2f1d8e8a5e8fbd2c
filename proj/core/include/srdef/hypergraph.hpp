#pragma once

#include <vector>

#include "srdef/complex.hpp"

namespace srdef {

/// All inclusion-minimal transversals (vertex covers) of a hypergraph whose
/// edges are bitmasks over [0, n). Branch-and-reduce enumeration with a final
/// antichain filter. Edges must be nonempty.
std::vector<Mask> minimal_transversals(int n, const std::vector<Mask>& edges);

}  // namespace srdef
