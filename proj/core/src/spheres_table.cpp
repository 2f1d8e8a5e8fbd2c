#include "srdef/spheres.hpp"

namespace srdef {

namespace {

// Reference catalogue of the 74 isomorphism classes reachable from the 7-gon
// complex by legal edge starrings, with the arrivals that produce each class
// and the reference tangent-sheaf invariant (-χ(Θ), stored, never recomputed).
// Bold rows of the source tables (no legal edges left) carry final = true.
std::vector<TableRow> build_rows() {
    auto E = [](const std::string& a, const std::string& b) {
        return std::vector<std::string>{a, b};
    };
    std::vector<TableRow> r;
    auto row = [&](const std::string& name, int vertices, long long facets,
                   std::vector<std::pair<std::string, std::vector<std::string>>> from,
                   int chi, bool final_row = false) {
        r.push_back({name, vertices, facets, std::move(from), chi, final_row});
    };

    row("K1", 15, 47, {{"A7", E("d1_3", "d4_6")}}, 34);
    row("K2", 15, 46, {{"A7", E("d1_3", "d4_7")}}, 44);

    row("K3", 16, 51, {{"K1", E("d1_3", "d4_7")}}, 38);
    row("K4", 16, 51, {{"K1", E("d1_4", "d5_7")}, {"K2", E("d2_4", "d5_7")}}, 38);
    row("K5", 16, 52, {{"K1", E("d1_6", "d2_4")}}, 28);
    row("K6", 16, 51, {{"K1", E("d1_6", "d2_5")}, {"K2", E("d1_6", "d3_5")}}, 36);
    row("K7", 16, 52, {{"K2", E("d1_3", "d5_7")}}, 38);
    row("K8", 16, 51, {{"K2", E("d1_4", "d5_7")}}, 36);
    row("K9", 16, 50, {{"K2", E("d1_6", "d2_5")}}, 46);

    row("K10", 17, 55,
        {{"K3", E("v1", "d4_7")}, {"K7", E("v1", "d4_6")}, {"K9", E("d1_3", "d4_6")}}, 40);
    row("K11", 17, 56, {{"K3", E("d1_3", "d5_7")}}, 32);
    row("K12", 17, 56, {{"K3", E("d1_4", "d5_7")}, {"K4", E("d1_3", "d4_7")}}, 32);
    row("K13", 17, 56, {{"K3", E("d1_6", "d2_4")}, {"K5", E("d1_3", "d4_7")}}, 32);
    row("K14", 17, 55, {{"K3", E("d1_6", "d2_5")}, {"K6", E("d1_3", "d4_7")}}, 40);
    row("K15", 17, 56, {{"K3", E("d1_6", "d3_5")}, {"K5", E("d1_6", "d2_5")}}, 32);
    row("K16", 17, 55, {{"K3", E("d2_7", "d3_6")}, {"K4", E("d3_7", "d4_6")}}, 42);
    row("K17", 17, 55, {{"K3", E("d3_7", "d4_6")}}, 44);
    row("K18", 17, 56, {{"K4", E("d1_6", "d2_4")}, {"K5", E("d1_4", "d5_7")}}, 34);
    row("K19", 17, 56,
        {{"K4", E("d2_4", "d5_7")}, {"K7", E("d1_4", "d5_7")}, {"K8", E("d1_3", "d4_6")}}, 32);
    row("K20", 17, 55, {{"K4", E("d2_7", "d3_6")}, {"K9", E("d2_4", "d5_7")}}, 42);
    row("K21", 17, 57, {{"K5", E("d1_6", "d4_6")}}, 24);
    row("K22", 17, 56, {{"K6", E("d1_6", "d2_4")}, {"K7", E("d1_6", "d3_5")}}, 32);
    row("K23", 17, 56, {{"K8", E("d1_3", "d5_7")}}, 32);
    row("K24", 17, 55, {{"K8", E("d2_6", "d3_5")}, {"K9", E("d2_6", "d3_5")}}, 38);

    row("K25", 18, 60,
        {{"K10", E("d1_4", "d5_7")},
         {"K12", E("d2_7", "d3_6")},
         {"K16", E("d1_4", "d5_7")},
         {"K19", E("d2_7", "d3_6")},
         {"K20", E("d1_3", "d4_7")}},
        36);
    row("K26", 18, 59, {{"K10", E("d1_6", "d2_5")}, {"K14", E("v1", "d4_7")}}, 42);
    row("K27", 18, 60,
        {{"K10", E("d1_6", "d3_5")}, {"K15", E("v1", "d4_7")}, {"K22", E("v2", "d2_4")}}, 34);
    row("K28", 18, 60, {{"K10", E("d3_7", "d4_6")}, {"K17", E("v1", "d3_7")}}, 36);
    row("K29", 18, 61, {{"K11", E("d1_4", "d5_7")}}, 28);
    row("K30", 18, 61, {{"K11", E("d1_6", "d3_5")}, {"K15", E("d1_3", "d5_7")}}, 28);
    row("K31", 18, 60,
        {{"K11", E("d3_7", "d4_6")},
         {"K12", E("d3_7", "d4_6")},
         {"K16", E("d3_7", "d4_6")},
         {"K17", E("d1_3", "d5_7")}},
        38);
    row("K32", 18, 61,
        {{"K12", E("d1_3", "d5_7")}, {"K13", E("d1_4", "d5_7")}, {"K18", E("d1_3", "d4_7")}},
        28);
    row("K33", 18, 61, {{"K12", E("d2_4", "d5_7")}, {"K19", E("d1_3", "d4_7")}}, 28);
    row("K34", 18, 60, {{"K13", E("d1_6", "d2_5")}, {"K15", E("d2_6", "d3_5")}}, 36);
    row("K35", 18, 60,
        {{"K13", E("d3_7", "d4_6")}, {"K15", E("d3_7", "d4_6")}, {"K17", E("d1_6", "d2_4")}},
        38);
    row("K36", 18, 60,
        {{"K14", E("d1_6", "d2_4")}, {"K22", E("d1_3", "d4_7")}, {"K23", E("v1", "d5_7")}}, 36);
    row("K37", 18, 60, {{"K14", E("d1_6", "d3_5")}, {"K22", E("d3_7", "d4_6")}}, 36);
    row("K38", 18, 59, {{"K14", E("d3_7", "d4_6")}, {"K17", E("d1_6", "d2_5")}}, 46);
    row("K39", 18, 60, {{"K15", E("d1_6", "d2_5")}}, 36);
    row("K40", 18, 60,
        {{"K15", E("d2_7", "d3_6")}, {"K16", E("d1_6", "d3_5")}, {"K18", E("d1_6", "d2_5")}},
        38);
    row("K41", 18, 61, {{"K18", E("d1_6", "d4_6")}, {"K21", E("d1_4", "d5_7")}}, 30, true);
    row("K42", 18, 61, {{"K22", E("d1_5", "d2_4")}}, 26);
    row("K43", 18, 61, {{"K22", E("d1_6", "d4_6")}}, 28, true);
    row("K44", 18, 60, {{"K23", E("d2_6", "d3_5")}, {"K24", E("d1_3", "d5_7")}}, 34);

    row("K45", 19, 65, {{"K25", E("d2_4", "d5_7")}, {"K33", E("d2_7", "d3_6")}}, 32, true);
    row("K46", 19, 65,
        {{"K25", E("d3_7", "d4_6")}, {"K28", E("d1_4", "d5_7")}, {"K31", E("d2_7", "d4_6")}},
        32, true);
    row("K47", 19, 64,
        {{"K26", E("d1_6", "d3_5")},
         {"K28", E("d1_6", "d2_5")},
         {"K37", E("v1", "d4_7")},
         {"K38", E("v1", "d3_7")}},
        38);
    row("K48", 19, 64,
        {{"K27", E("d1_6", "d2_5")}, {"K37", E("v3", "d3_5")}, {"K39", E("v1", "d4_7")}}, 38);
    row("K49", 19, 64,
        {{"K27", E("d2_6", "d3_5")},
         {"K34", E("v3", "d2_5")},
         {"K36", E("v3", "d2_4")},
         {"K44", E("v1", "d5_7")}},
        38);
    row("K50", 19, 65,
        {{"K27", E("d3_7", "d4_6")}, {"K28", E("d1_6", "d3_5")}, {"K35", E("v1", "d3_7")}}, 30);
    row("K51", 19, 65,
        {{"K29", E("v3", "d1_4")},
         {"K32", E("v3", "d1_3")},
         {"K34", E("d1_4", "d5_7")},
         {"K40", E("d2_6", "d3_5")}},
        32);
    row("K52", 19, 66, {{"K29", E("d1_6", "d3_5")}, {"K30", E("d1_4", "d5_7")}}, 24);
    row("K53", 19, 66, {{"K29", E("d2_4", "d5_7")}}, 24, true);
    row("K54", 19, 65,
        {{"K29", E("d3_7", "d4_6")},
         {"K30", E("d3_7", "d4_6")},
         {"K31", E("d1_4", "d5_7")},
         {"K32", E("d3_7", "d4_6")},
         {"K35", E("d1_4", "d5_7")},
         {"K40", E("d3_7", "d4_6")}},
        34);
    row("K55", 19, 65, {{"K30", E("d1_6", "d2_5")}, {"K39", E("d1_3", "d5_7")}}, 32);
    row("K56", 19, 65, {{"K30", E("d2_6", "d3_5")}, {"K34", E("d1_6", "d3_5")}}, 32);
    row("K57", 19, 66, {{"K32", E("d1_6", "d2_4")}}, 24);
    row("K58", 19, 64,
        {{"K34", E("d3_7", "d4_6")}, {"K35", E("d1_6", "d2_5")}, {"K39", E("d2_6", "d3_5")}},
        42);
    row("K59", 19, 64,
        {{"K36", E("d3_7", "d4_6")}, {"K37", E("d3_7", "d4_6")}, {"K38", E("d1_6", "d2_4")}},
        42);
    row("K60", 19, 65, {{"K37", E("d2_6", "d3_5")}, {"K42", E("d3_7", "d4_6")}}, 30);
    row("K61", 19, 64, {{"K39", E("d2_7", "d3_6")}, {"K40", E("d1_6", "d2_5")}}, 42);

    row("K62", 20, 68, {{"K47", E("v4", "d3_5")}, {"K48", E("v4", "d2_5")}}, 40);
    row("K63", 20, 69,
        {{"K47", E("d2_6", "d3_5")}, {"K50", E("v3", "d3_7")}, {"K60", E("v1", "d4_7")}}, 32);
    row("K64", 20, 69, {{"K47", E("d3_7", "d4_6")}, {"K59", E("v1", "d3_7")}}, 34);
    row("K65", 20, 68,
        {{"K48", E("v4", "d2_5")},
         {"K49", E("d1_6", "d2_5")},
         {"K58", E("v3", "d2_5")},
         {"K59", E("v3", "d2_4")}},
        44);
    row("K66", 20, 69,
        {{"K48", E("d3_7", "d4_6")}, {"K50", E("d1_6", "d2_5")}, {"K58", E("v1", "d3_7")}}, 34);
    row("K67", 20, 69,
        {{"K51", E("d3_7", "d4_6")},
         {"K54", E("v3", "d1_4")},
         {"K55", E("d3_7", "d4_6")},
         {"K58", E("d1_4", "d5_7")},
         {"K61", E("d2_6", "d3_5")}},
        38, true);
    row("K68", 20, 70, {{"K52", E("d2_6", "d3_5")}, {"K56", E("d1_4", "d5_7")}}, 28, true);
    row("K69", 20, 70,
        {{"K52", E("d3_7", "d4_6")}, {"K54", E("d1_6", "d3_5")}, {"K57", E("d3_7", "d4_6")}},
        30, true);
    row("K70", 20, 69,
        {{"K55", E("d2_6", "d3_5")}, {"K56", E("d1_6", "d2_5")}, {"K58", E("d1_6", "d3_5")}},
        38, true);
    row("K71", 20, 69, {{"K60", E("v3", "d3_5")}}, 34);

    row("K72", 21, 73,
        {{"K62", E("d2_6", "d3_5")},
         {"K64", E("v3", "d3_7")},
         {"K65", E("v4", "d2_5")},
         {"K66", E("v4", "d2_5")}},
        36);
    row("K73", 21, 73,
        {{"K63", E("v4", "v6")}, {"K66", E("v3", "d3_7")}, {"K71", E("v1", "d4_7")}}, 36);

    row("K74", 22, 77, {{"K72", E("v6", "d2_6")}, {"K73", E("v4", "v6")}}, 38, true);

    return r;
}

}  // namespace

const std::vector<TableRow>& table_reference() {
    static const std::vector<TableRow> rows = build_rows();
    return rows;
}

const std::vector<TableErratum>& table_errata() {
    // K7's unique listed arrival (the {d1_3, d5_7} starring of K2, which has
    // 46 facets and 5 of them containing that edge) yields 51 facets, and the
    // complete search finds no 52-facet class over K2; the printed 52 cannot
    // be consistent with the row's own provenance column.
    static const std::vector<TableErratum> errata = {{"K7", "facets", 52, 51}};
    return errata;
}

long long corrected_facet_count(const TableRow& row) {
    for (const auto& e : table_errata())
        if (e.row == row.name && e.field == "facets") return e.corrected;
    return row.facets;
}

}  // namespace srdef
