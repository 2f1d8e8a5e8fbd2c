#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/complex.hpp"
#include "srdef/homology.hpp"
#include "srdef/numeric.hpp"

using namespace srdef;

namespace {

SimplicialComplex random_flag_complex(std::mt19937& rng, int n, double p) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.push_back({i, j});
    return SimplicialComplex::clique_complex(labels, edges);
}

SimplicialComplex shuffled(const SimplicialComplex& k, std::mt19937& rng) {
    std::vector<std::string> names = k.labels();
    std::shuffle(names.begin(), names.end(), rng);
    std::vector<std::vector<std::string>> facets;
    for (Mask f : k.facets()) {
        std::vector<std::string> fl;
        for_bits(f, [&](int v) { fl.push_back(names[v]); });
        facets.push_back(fl);
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST_CASE("from_facets basics") {
    SimplicialComplex empty;  // {∅}
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.dim() == -1);
    CHECK(empty.facets().size() == 1);
    CHECK(empty.contains(0));

    SimplicialComplex bd3 = SimplicialComplex::boundary_simplex(3, "p");
    FVector fv = bd3.f_vector();
    CHECK(fv.counts == std::vector<long long>{1, 4, 6, 4});
    CHECK(bd3.pure());

    SimplicialComplex s0 = SimplicialComplex::two_points("a", "b");
    CHECK(s0.vertex_count() == 2);
    CHECK(s0.dim() == 0);
    CHECK(s0.faces_of_dim(1).empty());

    // maximality reduction
    SimplicialComplex k = SimplicialComplex::from_facets({{"a", "b"}, {"a"}, {"b", "a"}});
    CHECK(k.facets().size() == 1);
}

TEST_CASE("link and stars") {
    SimplicialComplex bd3 = SimplicialComplex::boundary_simplex(3, "p");
    // link of the empty face is the complex itself
    CHECK(bd3.link(0).same_faces(bd3));
    // link of a vertex of the tetrahedron boundary is a 3-cycle
    SimplicialComplex lk = bd3.link(bd3.face_mask({"p0"}));
    CHECK(lk.vertex_count() == 3);
    CHECK(lk.dim() == 1);
    CHECK(static_cast<int>(lk.faces_of_dim(1).size()) == 3);

    // closed star of the empty face is everything; of a facet, the facet
    CHECK(bd3.closed_star(0).same_faces(bd3));
    Mask facet = bd3.facets()[0];
    SimplicialComplex st = bd3.closed_star(facet);
    CHECK(st.facets().size() == 1);

    // valency-4 vertex of the octahedron has |open star| = 4 + 4 + 1
    SimplicialComplex oct = join(join(SimplicialComplex::two_points("a1", "a2"),
                                      SimplicialComplex::two_points("b1", "b2")),
                                 SimplicialComplex::two_points("c1", "c2"));
    Mask v = oct.face_mask({"a1"});
    CHECK(oct.valency(v) == 4);
    CHECK(oct.open_star(v).size() == 9);
}

TEST_CASE("join") {
    SimplicialComplex bd3 = SimplicialComplex::boundary_simplex(3, "p");
    // joining with {∅} changes nothing
    SimplicialComplex j = join(bd3, SimplicialComplex());
    CHECK(j.same_faces(bd3));

    // S0 * S0 * S0 is the octahedron boundary
    SimplicialComplex oct = join(join(SimplicialComplex::two_points("a1", "a2"),
                                      SimplicialComplex::two_points("b1", "b2")),
                                 SimplicialComplex::two_points("c1", "c2"));
    CHECK(oct.f_vector().counts == std::vector<long long>{1, 6, 12, 8});

    // generating-polynomial identity f(K*L) = f(K) f(L) on a random pair
    std::mt19937 rng(7);
    SimplicialComplex a = random_flag_complex(rng, 5, 0.6);
    SimplicialComplex b = random_flag_complex(rng, 4, 0.6);
    FVector fa = a.f_vector(), fb = b.f_vector(), fj = join(a, b).f_vector();
    std::vector<long long> prod(fa.counts.size() + fb.counts.size() - 1, 0);
    for (std::size_t i = 0; i < fa.counts.size(); ++i)
        for (std::size_t j2 = 0; j2 < fb.counts.size(); ++j2)
            prod[i + j2] += fa.counts[i] * fb.counts[j2];
    prod.resize(fj.counts.size(), 0);
    CHECK(prod == fj.counts);

    // pentagonal bipyramid = S0 * pentagon
    SimplicialComplex t7 = join(SimplicialComplex::two_points("u", "w"),
                                SimplicialComplex::cycle(5, "c"));
    CHECK(t7.vertex_count() == 7);
    CHECK(t7.facets().size() == 10);
}

TEST_CASE("star_face") {
    SimplicialComplex bd3 = SimplicialComplex::boundary_simplex(3, "p");
    Mask edge = bd3.faces_of_dim(1)[0];
    SimplicialComplex t5 = bd3.star_face(edge, "v");
    CHECK(t5.vertex_count() == 5);
    CHECK(t5.facets().size() == 6);

    CHECK_THROWS_AS(bd3.star_face(bd3.face_mask({"p0"}), "w"), const Error&);
    CHECK_THROWS_AS(bd3.star_face(edge, "p0"), const FreshLabelClash&);

    // facet count rule: starring an edge adds one facet per facet containing it
    SimplicialComplex a6 = assoc_build(6).complex;
    for (Mask e : a6.faces_of_dim(1)) {
        long long containing = 0;
        for (Mask f : a6.facets())
            if (subset(e, f)) ++containing;
        SimplicialComplex starred = a6.star_face(e, "z");
        CHECK(static_cast<long long>(starred.facets().size()) ==
              static_cast<long long>(a6.facets().size()) + containing);
    }
}

TEST_CASE("flip") {
    // unstar the apex of the triangular bipyramid back to the tetrahedron
    SimplicialComplex bd3 = SimplicialComplex::boundary_simplex(3, "p");
    Mask edge = bd3.face_mask({"p0", "p1"});
    SimplicialComplex t5 = bd3.star_face(edge, "v");
    SimplicialComplex back = t5.flip(t5.face_mask({"v"}), {"p0", "p1"});
    CHECK(isomorphic(back, bd3));

    // flip then reverse flip returns the original complex
    CHECK(back.same_faces(bd3));

    // a general edge-to-edge exchange must be rejected when the link does not factor
    SimplicialComplex a6 = assoc_build(6).complex;
    CHECK_THROWS_AS(a6.flip(a6.face_mask({"d1_3"}), {"d2_4", "d2_6"}), const NotExchangeable&);
}

TEST_CASE("flip involution on 2-2 exchanges") {
    // octahedron: exchanging an edge against the opposite vertex pair and
    // back returns the same complex
    SimplicialComplex oct = join(join(SimplicialComplex::two_points("a1", "a2"),
                                      SimplicialComplex::two_points("b1", "b2")),
                                 SimplicialComplex::two_points("c1", "c2"));
    Mask a = oct.face_mask({"a1", "b1"});
    SimplicialComplex flipped = oct.flip(a, {"c1", "c2"});
    CHECK(flipped.vertex_count() == 6);
    CHECK(is_homology_sphere(flipped));
    Mask b = flipped.face_mask({"c1", "c2"});
    SimplicialComplex back = flipped.flip(b, {"a1", "b1"});
    CHECK(canonical_form(back) == canonical_form(oct));
    CHECK(back.same_faces(oct));

    CHECK_THROWS_AS(oct.link(oct.face_mask({"a1", "a2"})), const NotAFace&);
}

TEST_CASE("clique size guard") {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) labels.push_back("k" + std::to_string(i));
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) edges.push_back({i, j});
    CHECK_THROWS_AS(SimplicialComplex::clique_complex(labels, edges, 3), const SizeLimit&);
}

TEST_CASE("unstar inside the polygon complex") {
    // link(δ_3n) = {{δ_13}, {δ_2n}} * 𝒜_{n-1}
    for (int n : {5, 6, 7}) {
        SimplicialComplex an = assoc_build(n).complex;
        std::string d3n = diagonal_label(make_diagonal(n, 3, n));
        SimplicialComplex lk = an.link(an.face_mask({d3n}));
        // it factors: the flip must succeed
        SimplicialComplex out = an.flip(an.face_mask({d3n}),
                                        {diagonal_label(make_diagonal(n, 1, 3)),
                                         diagonal_label(make_diagonal(n, 2, n))});
        CHECK(out.vertex_count() == an.vertex_count() - 1);
        // and reverse: star the new edge back
        Mask e = out.face_mask({diagonal_label(make_diagonal(n, 1, 3)),
                                diagonal_label(make_diagonal(n, 2, n))});
        SimplicialComplex back = out.star_face(e, d3n);
        CHECK(isomorphic(back, an));
        (void)lk;
    }
}

TEST_CASE("flag detection and minimal non-faces") {
    SimplicialComplex c3 = SimplicialComplex::boundary_simplex(2, "p");  // 3-cycle
    auto mnf = c3.minimal_nonfaces();
    REQUIRE(mnf.size() == 1);
    CHECK(popcount(mnf[0]) == 3);
    CHECK_FALSE(c3.is_flag());

    for (int n : {5, 6, 7}) {
        SimplicialComplex an = assoc_build(n).complex;
        CHECK(an.is_flag());
        long long expect = (binomial(n, 4)).convert_to<long long>();
        CHECK(static_cast<long long>(an.minimal_nonfaces().size()) == expect);
    }

    SimplicialComplex oct = join(join(SimplicialComplex::two_points("a1", "a2"),
                                      SimplicialComplex::two_points("b1", "b2")),
                                 SimplicialComplex::two_points("c1", "c2"));
    CHECK(oct.is_flag());
    CHECK(oct.minimal_nonfaces().size() == 3);
}

TEST_CASE("clique complex") {
    // complete graph gives the full simplex
    std::vector<std::pair<int, int>> k4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
    SimplicialComplex d3 = SimplicialComplex::clique_complex({"a", "b", "c", "d"}, k4);
    CHECK(d3.dim() == 3);
    CHECK(d3.facets().size() == 1);

    // 5-cycle gives the pentagon boundary
    std::vector<std::pair<int, int>> c5;
    for (int i = 0; i < 5; ++i) c5.push_back({i, (i + 1) % 5});
    SimplicialComplex pent = SimplicialComplex::clique_complex({"a", "b", "c", "d", "e"}, c5);
    CHECK(isomorphic(pent, assoc_build(5).complex));

    // non-crossing graph of the hexagon gives the 9-vertex complex with
    // Catalan(4) = 14 facets
    SimplicialComplex a6 = assoc_build(6).complex;
    CHECK(a6.vertex_count() == 9);
    CHECK(static_cast<long long>(a6.facets().size()) ==
          polygon_triangulations(6).convert_to<long long>());
}

TEST_CASE("downward closure and edge graph") {
    std::mt19937 rng(11);
    SimplicialComplex k = random_flag_complex(rng, 7, 0.5);
    const auto& fs = k.face_set();
    for (Mask f : k.all_faces()) {
        for_bits(f, [&](int v) { CHECK(fs.count(f & ~(Mask(1) << v))); });
    }
    // clique complex reproduces its own edge graph
    auto edges = k.edge_graph();
    SimplicialComplex k2 = SimplicialComplex::clique_complex(k.labels(), edges);
    CHECK(k2.same_faces(k));
}

TEST_CASE("link of join splits") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        SimplicialComplex a = random_flag_complex(rng, 5, 0.55);
        SimplicialComplex b = random_flag_complex(rng, 4, 0.55);
        std::vector<std::vector<std::string>> bf;
        for (Mask f : b.facets()) {
            std::vector<std::string> fl;
            for (const auto& l : b.face_labels(f)) fl.push_back("b." + l);
            bf.push_back(fl);
        }
        SimplicialComplex b2 =
            bf.empty() ? SimplicialComplex() : SimplicialComplex::from_facets(bf);
        SimplicialComplex jk = join(a, b2);
        if (a.all_faces().empty()) continue;
        Mask f = a.all_faces()[trial % a.all_faces().size()];
        Mask f_in_join = jk.face_mask(a.face_labels(f));
        SimplicialComplex lhs = jk.link(f_in_join);
        SimplicialComplex rhs = join(a.link(f), b2);
        CHECK(lhs.same_faces(rhs));
    }
}

TEST_CASE("flag join factors") {
    SimplicialComplex t7 = join(SimplicialComplex::two_points("u", "w"),
                                SimplicialComplex::cycle(5, "c"));
    auto factors = t7.flag_join_factors();
    CHECK(factors.size() == 2);
    std::set<int> sizes;
    for (const auto& f : factors) sizes.insert(f.vertex_count());
    CHECK(sizes == std::set<int>{2, 5});
}

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        SimplicialComplex k = random_flag_complex(rng, 7, 0.5);
        SimplicialComplex k2 = shuffled(k, rng);
        CHECK(canonical_form(k) == canonical_form(k2));
        CHECK(isomorphic(k, k2));
    }
    // non-flag path
    SimplicialComplex bd3 = SimplicialComplex::boundary_simplex(3, "p");
    SimplicialComplex bd3s = shuffled(bd3, rng);
    CHECK(canonical_form(bd3) == canonical_form(bd3s));
    // different complexes disagree
    CHECK(canonical_form(bd3) != canonical_form(SimplicialComplex::simplex(3, "p")));
}

TEST_CASE("valency examples") {
    SimplicialComplex oct = join(join(SimplicialComplex::two_points("a1", "a2"),
                                      SimplicialComplex::two_points("b1", "b2")),
                                 SimplicialComplex::two_points("c1", "c2"));
    for (const auto& l : oct.labels()) CHECK(oct.valency(oct.face_mask({l})) == 4);

    // pentagonal bipyramid: five valency-4 and two valency-5 vertices
    SimplicialComplex t7 = join(SimplicialComplex::two_points("u", "w"),
                                SimplicialComplex::cycle(5, "c"));
    std::multiset<long long> vals;
    for (const auto& l : t7.labels()) vals.insert(t7.valency(t7.face_mask({l})));
    CHECK(vals == std::multiset<long long>{4, 4, 4, 4, 4, 5, 5});

    // edges of a 2-sphere have valency 2
    for (Mask e : t7.faces_of_dim(1)) CHECK(t7.valency(e) == 2);
}
