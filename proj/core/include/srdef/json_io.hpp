#pragma once

#include <string>

#include <json.hpp>

#include "srdef/complex.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/degen.hpp"
#include "srdef/ideal.hpp"
#include "srdef/spheres.hpp"

namespace srdef {

using Json = nlohmann::ordered_json;

Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex load_complex(const std::string& path);
void save_json(const Json& j, const std::string& path);

Json ideal_to_json(const SquarefreeMonomialIdeal& ideal);
Json poly_to_json(const RationalPoly& p);  // exact fraction strings, ascending degree
Json certificate_to_json(const CotangentCertificate& cert);
Json records_to_json(const std::vector<SphereRecord>& records);
std::vector<SphereRecord> records_from_json(const Json& j);
Json record_certs_to_json(const std::vector<RecordCertificate>& certs);
Json degen_to_json(const DegenCertificate& cert, const VarTable& vars);

/// CSV mirroring the reference catalogue column layout:
/// vertices,name,facets,comes_from,minus_chi_theta
std::string records_to_csv(const std::vector<SphereRecord>& records,
                           const std::map<std::string, std::string>* catalogue_names = nullptr);

}  // namespace srdef
