#pragma once

#include <string>

#include "srdef/complex.hpp"

namespace srdef {

/// Complex specifier grammar:
///   spec := "assoc:" n            the n-gon diagonal complex (also "assocN")
///         | "deltahedron:T" n     the starring series sphere, 4 <= n <= 11
///         | "simplex:" m          the full m-simplex (m >= -1)
///         | "cn:" n               the iterated edge-starring series end result
///         | "join:(" spec "," spec ")"
///         | "file:" path          complex JSON {"vertices": [...], "facets": [[...]]}
SimplicialComplex parse_complex_spec(const std::string& spec);

}  // namespace srdef
