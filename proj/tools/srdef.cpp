// srdef: batch front end for the simplicial deformation toolkit.
// Exit codes: 0 success, 1 certification failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/degen.hpp"
#include "srdef/homology.hpp"
#include "srdef/ideal.hpp"
#include "srdef/json_io.hpp"
#include "srdef/specparse.hpp"
#include "srdef/spheres.hpp"

using namespace srdef;

namespace {

struct Options {
    int jobs = 1;
    std::string complex_spec;
    std::string out;
    std::string csv;
    std::string seed = "assoc:7";
    std::string expect;
    std::string face;
    int genus = 0;
    std::string choices;
    std::string quadric;
    int n = 0, r = 0;
    std::string partition;
    unsigned rep_seed = 0;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const Json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json(j, out);
}

int cmd_build(const Options& o) {
    SimplicialComplex k = parse_complex_spec(o.complex_spec);
    Json j = complex_to_json(k);
    j["f_vector"] = k.f_vector().counts;
    j["flag"] = k.is_flag();
    j["canonical_hash"] = canonical_hash(k);
    emit(j, o.out);
    return 0;
}

int cmd_link(const Options& o) {
    SimplicialComplex k = parse_complex_spec(o.complex_spec);
    SimplicialComplex lk = k.link(k.face_mask(split_list(o.face, ',')));
    emit(complex_to_json(lk), o.out);
    return 0;
}

int cmd_t1(const Options& o) {
    SimplicialComplex k = parse_complex_spec(o.complex_spec);
    CotangentCertificate cert = cotangent_certificate(k, 1, o.jobs);
    Json j = certificate_to_json(cert);
    if (isomorphic(k, assoc_build(6).complex)) {
        // the K3 case: one non-algebraic deformation on top of the
        // algebraic degree-0 part
        j["nonalgebraic_contribution"] = k3_nonalgebraic_t1_contribution;
        j["versal_dimension"] = cert.degree0_dim + k3_nonalgebraic_t1_contribution;
    }
    emit(j, o.out);
    return 0;
}

int cmd_ideal(const Options& o) {
    SimplicialComplex k = parse_complex_spec(o.complex_spec);
    emit(ideal_to_json(sr_ideal(k)), o.out);
    return 0;
}

int cmd_t2(const Options& o) {
    SimplicialComplex k = parse_complex_spec(o.complex_spec);
    CotangentCertificate cert = t2_certificate(k, o.jobs);
    emit(certificate_to_json(cert), o.out);
    return cert.all_zero ? 0 : 1;
}

int cmd_hilbert(const Options& o) {
    SimplicialComplex k = parse_complex_spec(o.complex_spec);
    Json j;
    j["degree"] = degree(k);
    j["h_numerator"] = poly_to_json(hilbert_series_numerator(k));
    j["hilbert_polynomial"] = poly_to_json(hilbert_polynomial(k));
    if (k.pure() && k.dim() == 3) {
        RationalPoly fano = hilbert_poly_fano4(k);
        j["cone_polynomial"] = poly_to_json(fano);
        j["cone_polynomial_consistent"] =
            fano == hilbert_polynomial(join(k, SimplicialComplex::simplex(0, "q")));
    }
    emit(j, o.out);
    return 0;
}

int cmd_search(const Options& o) {
    SimplicialComplex seed = parse_complex_spec(o.seed);
    SearchOptions so;
    so.jobs = o.jobs;
    so.rep_seed = o.rep_seed;
    auto records = star_search(seed, so);
    int rc = 0;
    Json j = records_to_json(records);
    const std::map<std::string, std::string>* names = nullptr;
    TableMatch m;
    if (o.expect == "table1") {
        m = match_table(records);
        j["matched"] = m.matched;
        if (!m.matched) j["mismatch"] = m.detail;
        rc = m.matched ? 0 : 1;
        if (m.matched) {
            names = &m.names;
            // re-attach the reference invariant to matched records
            std::map<std::string, int> chi;
            for (const auto& row : table_reference()) chi[row.name] = row.minus_chi_theta;
            for (auto& e : j["records"]) {
                auto it = m.names.find(e["name"].get<std::string>());
                if (it != m.names.end() && chi.count(it->second)) {
                    e["catalogue_name"] = it->second;
                    e["minus_chi_theta"] = chi[it->second];
                }
            }
        }
    }
    emit(j, o.out);
    if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        f << records_to_csv(records, names);
    }
    std::fprintf(stderr, "%zu classes\n", records.size() - 1);
    return rc;
}

int cmd_verify(const Options& o) {
    std::ifstream in(o.complex_spec);
    if (!in) throw Error("cannot open " + o.complex_spec);
    Json j = Json::parse(in);
    auto records = records_from_json(j);
    auto certs = verify_records(records, o.jobs);
    Json out = record_certs_to_json(certs);
    bool all = true;
    for (const auto& c : certs) all = all && c.certified;
    out["all_certified"] = all;
    emit(out, o.out);
    return all ? 0 : 1;
}

int cmd_table(const Options& o) {
    Json arr = Json::array();
    for (const auto& row : table_reference()) {
        Json e;
        e["name"] = row.name;
        e["vertices"] = row.vertices;
        e["facets"] = row.facets;
        e["final"] = row.final_row;
        e["minus_chi_theta"] = row.minus_chi_theta;
        Json prov = Json::array();
        for (const auto& [p, edge] : row.comes_from) {
            Json pe;
            pe["parent"] = p;
            pe["edge"] = edge;
            prov.push_back(pe);
        }
        e["comes_from"] = prov;
        arr.push_back(e);
    }
    Json j;
    j["rows"] = arr;
    emit(j, o.out);
    if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        f << "vertices,name,facets,comes_from,minus_chi_theta\n";
        for (const auto& row : table_reference()) {
            std::string prov;
            for (const auto& [p, edge] : row.comes_from) {
                if (!prov.empty()) prov += " ";
                prov += "{" + edge[0] + " " + edge[1] + "}@" + p;
            }
            f << row.vertices << "," << row.name << "," << row.facets << "," << prov << ","
              << row.minus_chi_theta << "\n";
        }
    }
    return 0;
}

int cmd_degen_certify(const Options& o) {
    std::optional<std::vector<int>> choices;
    if (!o.choices.empty()) {
        std::vector<int> ch;
        for (char c : o.choices) {
            if (c != '0' && c != '1') throw Error("choices must be a 0/1 string");
            ch.push_back(c - '0');
        }
        choices = ch;
    }
    std::optional<std::pair<std::string, std::string>> quadric;
    if (!o.quadric.empty()) {
        auto parts = split_list(o.quadric, ',');
        if (parts.size() != 2) throw Error("quadric needs two variable names");
        quadric = std::make_pair(parts[0], parts[1]);
    }
    GeneratorSet gs = generator_set(o.genus, quadric);
    DegenCertificate cert = certify_degeneration(o.genus, choices, quadric);
    emit(degen_to_json(cert, gs.vars), o.out);
    return cert.pass ? 0 : 1;
}

int cmd_degen_choices(const Options& o) {
    auto outcomes = choice_enumeration(o.genus);
    Json arr = Json::array();
    long long hits = 0;
    for (const auto& oc : outcomes) {
        Json e;
        std::string bits;
        for (int b : oc.choices) bits += char('0' + b);
        e["choices"] = bits;
        e["sphere_vertices"] = oc.sphere_vertices;
        e["sphere_ok"] = oc.sphere_ok;
        e["matches_target"] = oc.iso_to_target;
        arr.push_back(e);
        if (oc.iso_to_target) ++hits;
    }
    Json j;
    j["genus"] = o.genus;
    j["outcomes"] = arr;
    j["target_matches"] = hits;
    emit(j, o.out);
    return 0;
}

int cmd_assoc_build(const Options& o) {
    AssocComplex a = assoc_build(o.n);
    Json j = complex_to_json(a.complex);
    j["n"] = a.n;
    j["facet_count"] = a.complex.facets().size();
    emit(j, o.out);
    return 0;
}

int cmd_assoc_unstar(const Options& o) {
    auto seq = unstar_sequence(default_unstar_plan(o.n, o.r));
    Json arr = Json::array();
    for (const auto& k : seq) {
        Json e;
        e["vertices"] = k.vertex_count();
        e["facets"] = k.facets().size();
        e["t2_zero"] = t2_is_zero(k, o.jobs);
        e["canonical_hash"] = canonical_hash(k);
        arr.push_back(e);
    }
    Json j;
    j["n"] = o.n;
    j["r"] = o.r;
    j["steps"] = arr;
    emit(j, o.out);
    for (const auto& e : arr)
        if (!e["t2_zero"].get<bool>()) return 1;
    return 0;
}

int cmd_assoc_chain(const Options& o) {
    std::vector<int> rs;
    for (const auto& p : split_list(o.partition, ',')) rs.push_back(std::stoi(p));
    auto seq = hyperoct_chain(rs);
    Json arr = Json::array();
    for (const auto& k : seq) {
        Json e;
        e["vertices"] = k.vertex_count();
        e["facets"] = k.facets().size();
        e["t2_zero"] = t2_is_zero(k, o.jobs);
        arr.push_back(e);
    }
    Json j;
    j["partition"] = rs;
    j["steps"] = arr;
    emit(j, o.out);
    for (const auto& e : arr)
        if (!e["t2_zero"].get<bool>()) return 1;
    return 0;
}

int cmd_assoc_cn(const Options& o) {
    auto seq = c_n_series(o.n);
    Json arr = Json::array();
    for (const auto& k : seq) {
        Json e;
        e["vertices"] = k.vertex_count();
        e["facets"] = k.facets().size();
        e["flag"] = k.is_flag();
        e["t2_zero"] = t2_is_zero(k, o.jobs);
        arr.push_back(e);
    }
    Json j;
    j["n"] = o.n;
    j["steps"] = arr;
    emit(j, o.out);
    for (const auto& e : arr)
        if (!e["t2_zero"].get<bool>()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation toolkit for Stanley-Reisner schemes"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--jobs", o.jobs, "worker threads (outputs are scheduling independent)");

    auto* build = app.add_subcommand("build", "construct a complex and print it");
    build->add_option("--complex", o.complex_spec)->required();
    build->add_option("--out", o.out);

    auto* link = app.add_subcommand("link", "link of a face");
    link->add_option("--complex", o.complex_spec)->required();
    link->add_option("--face", o.face, "comma-separated vertex labels")->required();
    link->add_option("--out", o.out);

    auto* t1 = app.add_subcommand("t1", "first-order deformation report");
    t1->add_option("--complex", o.complex_spec)->required();
    t1->add_option("--out", o.out);

    auto* t2 = app.add_subcommand("t2", "obstruction-space certificate (exit 1 when nonzero)");
    t2->add_option("--complex", o.complex_spec)->required();
    t2->add_option("--out", o.out);

    auto* hilbert = app.add_subcommand("hilbert", "degree and Hilbert data");
    hilbert->add_option("--complex", o.complex_spec)->required();
    hilbert->add_option("--out", o.out);

    auto* ideal = app.add_subcommand("ideal", "non-face ideal generators");
    ideal->add_option("--complex", o.complex_spec)->required();
    ideal->add_option("--out", o.out);

    auto* search = app.add_subcommand("search", "legal-edge starring search");
    search->add_option("--seed", o.seed);
    search->add_option("--expect", o.expect, "compare against 'table1'");
    search->add_option("--out", o.out);
    search->add_option("--csv", o.csv);
    search->add_option("--rep-seed", o.rep_seed, "randomize orbit representatives");

    auto* verify = app.add_subcommand("verify", "certify a search output file");
    verify->add_option("table", o.complex_spec, "records JSON produced by search")->required();
    verify->add_option("--out", o.out);

    auto* table = app.add_subcommand("table", "dump the reference catalogue");
    table->add_option("--out", o.out);
    table->add_option("--csv", o.csv);

    auto* degen = app.add_subcommand("degen", "initial-ideal degenerations");
    degen->require_subcommand(1);
    auto* certify = degen->add_subcommand("certify", "certify one genus");
    certify->add_option("--genus", o.genus)->required()->check(CLI::Range(6, 10));
    certify->add_option("--choices", o.choices, "bit string for the free comparisons");
    certify->add_option("--quadric", o.quadric, "genus-6 quadric pair, e.g. x12,x15");
    certify->add_option("--out", o.out);
    auto* choices = degen->add_subcommand("choices", "enumerate the free comparisons");
    choices->add_option("--genus", o.genus)->required()->check(CLI::Range(9, 10));
    choices->add_option("--out", o.out);

    auto* assoc = app.add_subcommand("assoc", "polygon diagonal complexes");
    assoc->require_subcommand(1);
    auto* abuild = assoc->add_subcommand("build", "build the n-gon complex");
    abuild->add_option("n", o.n)->required();
    abuild->add_option("--out", o.out);
    auto* aunstar = assoc->add_subcommand("unstar", "unstar down to the (r, n+3-r) join");
    aunstar->add_option("n", o.n)->required();
    aunstar->add_option("r", o.r)->required();
    aunstar->add_option("--out", o.out);
    auto* achain = assoc->add_subcommand("chain", "iterated splitting for a partition");
    achain->add_option("partition", o.partition, "comma-separated parts, e.g. 4,4,5")->required();
    achain->add_option("--out", o.out);
    auto* acn = assoc->add_subcommand("cn", "edge-starring series");
    acn->add_option("n", o.n)->required();
    acn->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*build) return cmd_build(o);
        if (*link) return cmd_link(o);
        if (*t1) return cmd_t1(o);
        if (*t2) return cmd_t2(o);
        if (*hilbert) return cmd_hilbert(o);
        if (*ideal) return cmd_ideal(o);
        if (*search) return cmd_search(o);
        if (*verify) return cmd_verify(o);
        if (*table) return cmd_table(o);
        if (*degen) {
            if (*certify) return cmd_degen_certify(o);
            if (*choices) return cmd_degen_choices(o);
        }
        if (*assoc) {
            if (*abuild) return cmd_assoc_build(o);
            if (*aunstar) return cmd_assoc_unstar(o);
            if (*achain) return cmd_assoc_chain(o);
            if (*acn) return cmd_assoc_cn(o);
        }
    } catch (const BadSpecifier& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
