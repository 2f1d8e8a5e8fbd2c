#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srdef/complex.hpp"
#include "srdef/cotangent.hpp"

namespace srdef {

/// One node of the starring search, matching a catalogue row.
struct SphereRecord {
    std::string name;
    SimplicialComplex complex;
    int vertex_count = 0;
    long long facet_count = 0;
    // arrivals: parent name plus the starred edge (two vertex labels of the parent)
    std::vector<std::pair<std::string, std::vector<std::string>>> provenance;
    std::optional<int> minus_chi_theta;  // reference value only, never recomputed
    bool final_record = false;           // no legal edges
};

/// The T-series of triangulated 2-spheres built by edge starrings:
/// T4 = boundary of the tetrahedron, then the valency rule up to T10 and the
/// one-valency-four rule for T11. Returns T4..T11 (index 0 = T4).
/// Throws RuleAmbiguous if the qualifying edges disagree up to isomorphism.
std::vector<SimplicialComplex> deltahedra_series();
SimplicialComplex deltahedron(int n);  // 4 <= n <= 11

/// Edges a of a flag homology-3-sphere such that every edge e of link(a) has
/// link(e, K) a 4-cycle; starring those preserves 4/5-gon edge links.
std::vector<Mask> legal_edges(const SimplicialComplex& k);

struct SearchOptions {
    int jobs = 1;
    unsigned rep_seed = 0;  // shuffles orbit-representative choice; the set of
                            // isomorphism classes must not depend on it
};

/// Breadth-first search over legal-edge starrings from the seed, one starring
/// per edge orbit, deduplicated by canonical form. New vertices are labeled
/// v1, v2, ... by the step at which they appear.
std::vector<SphereRecord> star_search(const SimplicialComplex& seed,
                                      const SearchOptions& opts = {});

struct RecordCertificate {
    std::string name;
    bool checked_directly = false;  // full certification ran on this record
    bool certified = false;         // directly or through a certified descendant
    std::string via;                // descendant name when propagated
    std::vector<PieceEntry> nonzero_pieces;
};

/// Certify the search output: terminal records get the full treatment
/// (edge links 4/5-gons, vanishing of the non-edge pieces by both the L_b
/// homology shortcut and the pair model, vertex pieces included); ancestors
/// inherit certification from certified descendants.
std::vector<RecordCertificate> verify_records(const std::vector<SphereRecord>& records,
                                              int jobs = 1);

struct ConjectureReport {
    bool hypothesis = false;   // all codimension-2 face links are 4- or 5-gons
    bool conclusion = false;   // T^2 vanishes
    bool agreement = false;    // hypothesis -> conclusion held on this input
    std::vector<std::string> offending_face;  // a codim-2 face with a big link, if any
};

ConjectureReport conjecture_probe(const SimplicialComplex& k, int jobs = 1);

/// Reference catalogue rows (names, counts, provenance, reference invariants).
struct TableRow {
    std::string name;
    int vertices = 0;
    long long facets = 0;
    std::vector<std::pair<std::string, std::vector<std::string>>> comes_from;
    int minus_chi_theta = 0;
    bool final_row = false;
};

const std::vector<TableRow>& table_reference();

/// Cells of the published catalogue contradicted by their own provenance
/// entries (verified through the replay and the search): the stored rows keep
/// the published values, comparisons use the corrected ones and report the
/// correction.
struct TableErratum {
    std::string row;
    std::string field;
    long long published = 0;
    long long corrected = 0;
};

const std::vector<TableErratum>& table_errata();
long long corrected_facet_count(const TableRow& row);

/// Rebuild every catalogue complex by replaying the first recorded starring
/// per row; keyed by row name. The seed name "A7" denotes the 7-gon complex.
std::map<std::string, SimplicialComplex> replay_table();

struct TableMatch {
    bool matched = false;
    std::string detail;                        // first mismatch, empty when matched
    std::map<std::string, std::string> names;  // search name -> catalogue name
    std::vector<std::string> errata_applied;
};

/// Row-for-row comparison of a search run against the reference catalogue:
/// canonical forms, vertex/facet counts, provenance arrivals up to
/// automorphism, and finality must all agree.
TableMatch match_table(const std::vector<SphereRecord>& records);

}  // namespace srdef
