#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/json_io.hpp"
#include "srdef/specparse.hpp"
#include "srdef/spheres.hpp"

using namespace srdef;

TEST_CASE("complex specifiers") {
    CHECK(isomorphic(parse_complex_spec("assoc:6"), assoc_build(6).complex));
    CHECK(isomorphic(parse_complex_spec("assoc6"), assoc_build(6).complex));
    CHECK(isomorphic(parse_complex_spec("deltahedron:T7"), deltahedron(7)));
    CHECK(parse_complex_spec("simplex:3").dim() == 3);
    SimplicialComplex j = parse_complex_spec("join:(assoc:4,simplex:0)");
    CHECK(j.vertex_count() == 3);
    SimplicialComplex nested = parse_complex_spec("join:(join:(assoc:4,assoc:4),assoc:4)");
    CHECK(nested.f_vector().counts == std::vector<long long>{1, 6, 12, 8});
    CHECK_THROWS_AS(parse_complex_spec("nope:3"), const BadSpecifier&);
    CHECK_THROWS_AS(parse_complex_spec("assoc:x"), const BadSpecifier&);
}

TEST_CASE("complex json round trip") {
    SimplicialComplex k = assoc_build(5).complex;
    Json j = complex_to_json(k);
    SimplicialComplex back = complex_from_json(j);
    CHECK(back.same_faces(k));

    std::string path = "spec_roundtrip_test.json";
    save_json(j, path);
    SimplicialComplex loaded = load_complex(path);
    CHECK(loaded.same_faces(k));
    std::remove(path.c_str());
}

TEST_CASE("records json round trip") {
    SphereRecord r;
    r.name = "k01";
    r.complex = deltahedron(5);
    r.vertex_count = 5;
    r.facet_count = 6;
    r.provenance = {{"seed", {"p0", "p1"}}};
    r.final_record = false;
    Json j = records_to_json({r});
    auto back = records_from_json(j);
    REQUIRE(back.size() == 1);
    CHECK(back[0].name == "k01");
    CHECK(back[0].provenance == r.provenance);
    CHECK(back[0].complex.same_faces(r.complex));
}
