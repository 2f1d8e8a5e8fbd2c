#include "srdef/json_io.hpp"

#include <fstream>

#include "srdef/canonical.hpp"
#include "srdef/polynomial.hpp"

namespace srdef {

Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["vertices"] = k.labels();
    Json facets = Json::array();
    for (Mask f : k.facets()) facets.push_back(k.face_labels(f));
    j["facets"] = facets;
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.contains("facets")) throw Error("complex JSON needs a 'facets' field");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j["facets"]) facets.push_back(f.get<std::vector<std::string>>());
    SimplicialComplex k = SimplicialComplex::from_facets(facets);
    if (j.contains("vertices")) {
        auto declared = j["vertices"].get<std::vector<std::string>>();
        for (const auto& l : k.labels())
            if (std::find(declared.begin(), declared.end(), l) == declared.end())
                throw Error("facet vertex '" + l + "' missing from the declared vertex list");
    }
    return k;
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j = Json::parse(in);
    return complex_from_json(j);
}

void save_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

Json ideal_to_json(const SquarefreeMonomialIdeal& ideal) {
    Json j;
    j["variables"] = ideal.variables;
    Json gens = Json::array();
    for (const auto& g : ideal.generator_labels()) gens.push_back(g);
    j["generators"] = gens;
    return j;
}

Json poly_to_json(const RationalPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.c) coeffs.push_back(c.str());
    Json j;
    j["coefficients"] = coeffs;
    return j;
}

Json certificate_to_json(const CotangentCertificate& cert) {
    Json j;
    j["order"] = cert.order;
    j["complex_hash"] = cert.complex_hash;
    j["all_zero"] = cert.all_zero;
    j["degree0_dim"] = cert.degree0_dim;
    j["total_dim"] = cert.total_dim;
    j["face_pairs_skipped"] = cert.face_pairs_skipped;
    Json pairs = Json::array();
    for (const auto& p : cert.pieces) {
        Json e;
        e["a"] = p.a;
        e["b"] = p.b;
        e["i"] = cert.order;
        e["dim"] = p.dim;
        pairs.push_back(e);
    }
    j["pairs"] = pairs;
    return j;
}

Json records_to_json(const std::vector<SphereRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records) {
        Json e;
        e["name"] = r.name;
        e["vertices"] = r.vertex_count;
        e["facets"] = r.facet_count;
        e["final"] = r.final_record;
        Json prov = Json::array();
        for (const auto& [p, edge] : r.provenance) {
            Json pe;
            pe["parent"] = p;
            pe["edge"] = edge;
            prov.push_back(pe);
        }
        e["comes_from"] = prov;
        if (r.minus_chi_theta) e["minus_chi_theta"] = *r.minus_chi_theta;
        e["complex"] = complex_to_json(r.complex);
        e["canonical_hash"] = canonical_hash(r.complex);
        arr.push_back(e);
    }
    Json j;
    j["records"] = arr;
    return j;
}

std::vector<SphereRecord> records_from_json(const Json& j) {
    std::vector<SphereRecord> out;
    for (const auto& e : j.at("records")) {
        SphereRecord r;
        r.name = e.at("name").get<std::string>();
        r.vertex_count = e.at("vertices").get<int>();
        r.facet_count = e.at("facets").get<long long>();
        r.final_record = e.at("final").get<bool>();
        for (const auto& pe : e.at("comes_from"))
            r.provenance.push_back(
                {pe.at("parent").get<std::string>(), pe.at("edge").get<std::vector<std::string>>()});
        if (e.contains("minus_chi_theta")) r.minus_chi_theta = e["minus_chi_theta"].get<int>();
        r.complex = complex_from_json(e.at("complex"));
        out.push_back(std::move(r));
    }
    return out;
}

Json record_certs_to_json(const std::vector<RecordCertificate>& certs) {
    Json arr = Json::array();
    for (const auto& c : certs) {
        Json e;
        e["name"] = c.name;
        e["checked_directly"] = c.checked_directly;
        e["certified"] = c.certified;
        if (!c.via.empty()) e["via"] = c.via;
        Json bad = Json::array();
        for (const auto& p : c.nonzero_pieces) {
            Json pe;
            pe["a"] = p.a;
            pe["b"] = p.b;
            pe["dim"] = p.dim;
            bad.push_back(pe);
        }
        e["nonzero_pieces"] = bad;
        arr.push_back(e);
    }
    Json j;
    j["certificates"] = arr;
    return j;
}

Json degen_to_json(const DegenCertificate& cert, const VarTable& vars) {
    Json j;
    j["genus"] = cert.genus;
    Json w;
    for (int v = 0; v < vars.size(); ++v) w[vars.names[v]] = cert.order.weights[v];
    j["weights"] = w;
    j["constraints_checked"] = cert.order.constraints.size();
    Json inits = Json::array();
    for (const auto& m : cert.initials) inits.push_back(mono_to_string(m, vars));
    j["initial_monomials"] = inits;
    j["transversal_count"] = cert.sz.transversal_count;
    j["transversal_cardinality"] = cert.sz.transversal_cardinality;
    j["expected_codim"] = cert.sz.expected_codim;
    j["degree_bound"] = cert.sz.degree_bound;
    j["expected_complex"] = cert.expected_name;
    j["pass"] = cert.pass;
    if (!cert.sz.reason.empty()) j["reason"] = cert.sz.reason;
    return j;
}

std::string records_to_csv(const std::vector<SphereRecord>& records,
                           const std::map<std::string, std::string>* catalogue_names) {
    std::string csv = "vertices,name,facets,comes_from,minus_chi_theta\n";
    auto display = [&](const std::string& n) {
        if (catalogue_names) {
            auto it = catalogue_names->find(n);
            if (it != catalogue_names->end()) return it->second;
        }
        return n;
    };
    for (const auto& r : records) {
        std::string prov;
        for (const auto& [p, edge] : r.provenance) {
            if (!prov.empty()) prov += " ";
            prov += "{" + edge[0] + " " + edge[1] + "}@" + display(p);
        }
        csv += std::to_string(r.vertex_count) + "," + display(r.name) + "," +
               std::to_string(r.facet_count) + "," + prov + ",";
        if (r.minus_chi_theta) csv += std::to_string(*r.minus_chi_theta);
        csv += "\n";
    }
    return csv;
}

}  // namespace srdef
