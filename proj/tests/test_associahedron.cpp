#include <doctest.h>

#include <random>
#include <set>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/homology.hpp"
#include "srdef/numeric.hpp"
#include "srdef/spheres.hpp"

using namespace srdef;

TEST_CASE("crossing predicate") {
    CHECK(crossing({1, 3}, {2, 4}));
    CHECK_FALSE(crossing({1, 3}, {3, 5}));
    CHECK_FALSE(crossing({1, 3}, {4, 6}));
    CHECK(crossing({1, 4}, {2, 6}));
    CHECK(crossing({2, 5}, {3, 6}));
    CHECK_THROWS_AS(make_diagonal(6, 1, 2), const Error&);
    CHECK_THROWS_AS(make_diagonal(6, 1, 6), const Error&);
    CHECK(make_diagonal(6, 7, 3) == Diagonal{1, 3});
}

TEST_CASE("build") {
    CHECK(assoc_build(3).complex.dim() == -1);
    SimplicialComplex a4 = assoc_build(4).complex;
    CHECK(a4.vertex_count() == 2);
    CHECK(a4.faces_of_dim(1).empty());

    SimplicialComplex a5 = assoc_build(5).complex;
    CHECK(a5.vertex_count() == 5);
    CHECK(a5.facets().size() == 5);
    CHECK(isomorphic(a5, SimplicialComplex::cycle(5, "c")));

    SimplicialComplex a6 = assoc_build(6).complex;
    CHECK(a6.vertex_count() == 9);
    CHECK(a6.facets().size() == 14);
    CHECK(isomorphic(a6, deltahedron(9)));

    SimplicialComplex a7 = assoc_build(7).complex;
    CHECK(a7.vertex_count() == 14);
    CHECK(a7.facets().size() == 42);

    // facet counts are triangulation counts
    for (int n = 4; n <= 9; ++n)
        CHECK(static_cast<long long>(assoc_build(n).complex.facets().size()) ==
              polygon_triangulations(n).convert_to<long long>());
}

TEST_CASE("polygon symmetry acts") {
    // rotation by one step induces an automorphism
    for (int n : {5, 6}) {
        SimplicialComplex an = assoc_build(n).complex;
        std::vector<std::vector<std::string>> rotated;
        for (Mask f : an.facets()) {
            std::vector<std::string> fl;
            for (const auto& l : an.face_labels(f)) {
                int i = l[1] - '0';
                int j = l[3] - '0';
                fl.push_back(diagonal_label(make_diagonal(n, i + 1, j + 1)));
            }
            rotated.push_back(fl);
        }
        SimplicialComplex rot = SimplicialComplex::from_facets(rotated);
        CHECK(rot.same_faces(an));
        // automorphism count is at least the dihedral order
        CHECK(automorphisms(an).size() >= 2u * n);
    }
}

TEST_CASE("link decomposition") {
    // a main diagonal of the 7-gon splits it 4 + 5
    CHECK(link_decomposition(7, {{1, 4}}) == std::vector<int>{4, 5});
    // a facet decomposes into triangles
    SimplicialComplex a6 = assoc_build(6).complex;
    Mask facet = a6.facets()[0];
    std::vector<Diagonal> diags;
    for (const auto& l : a6.face_labels(facet))
        diags.push_back(make_diagonal(6, l[1] - '0', l[3] - '0'));
    CHECK(link_decomposition(6, diags) == std::vector<int>{3, 3, 3, 3});

    // Σ n_i = n + 2(r+1) on random faces of the 8-gon complex
    SimplicialComplex a8 = assoc_build(8).complex;
    std::mt19937 rng(13);
    auto faces = a8.all_faces();
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    for (int t = 0; t < 10; ++t) {
        Mask f = faces[pick(rng)];
        std::vector<Diagonal> ds;
        for (const auto& l : a8.face_labels(f)) {
            int i = l[1] - '0';
            int j = l[3] - '0';
            ds.push_back(make_diagonal(8, i, j));
        }
        auto sizes = link_decomposition(8, ds);
        int total = 0;
        for (int s : sizes) total += s;
        CHECK(total == 8 + 2 * (popcount(f) - 1 + 1));
    }
}

TEST_CASE("l_b structure matches the link intersection") {
    for (int n : {5, 6, 7}) {
        SimplicialComplex an = assoc_build(n).complex;
        for (Mask b : an.minimal_nonfaces()) {
            auto labels = an.face_labels(b);
            auto parse = [&](const std::string& l) {
                return make_diagonal(n, l[1] - '0', l[3] - '0');
            };
            SimplicialComplex structural = l_b_structure(n, parse(labels[0]), parse(labels[1]));
            SimplicialComplex direct = l_b(an, b);
            CHECK(isomorphic(structural, direct));
            CHECK(structural.dim() == n - 5);
            // a ball: all reduced homology vanishes
            if (structural.dim() >= 0) {
                for (long long r : reduced_betti(structural)) CHECK(r == 0);
            }
        }
    }
}

TEST_CASE("t1 basis cardinalities") {
    auto sizes = [](int n, int m) {
        T1Basis b = t1_basis(n, m);
        return std::array<long long, 4>{
            static_cast<long long>(b.sets[0].size()), static_cast<long long>(b.sets[1].size()),
            static_cast<long long>(b.sets[2].size()), static_cast<long long>(b.sets[3].size())};
    };
    CHECK(sizes(6, 0) == std::array<long long, 4>{18, 6, 6, 3});
    CHECK(sizes(5, -1) == std::array<long long, 4>{5, 0, 0, 0});
    for (int n = 5; n <= 8; ++n)
        for (int m = -1; m <= 2; ++m) {
            T1Basis b = t1_basis(n, m);
            CHECK(static_cast<long long>(b.sets[0].size()) == 1LL * n * (n - 3) * (n - 4) / 2);
            CHECK(static_cast<long long>(b.sets[1].size()) == 1LL * n * (m + 1));
            CHECK(static_cast<long long>(b.sets[2].size()) == 1LL * n * (n - 5));
            CHECK(static_cast<long long>(b.sets[3].size()) == 1LL * n * (n - 5) / 2);
            CHECK(b.total() == 1LL * n * (n * n - 4 * n - 3) / 2 + 1LL * n * (m + 1));
        }
}

TEST_CASE("t1 basis elements index nonzero pieces") {
    int n = 6, m = 0;
    SimplicialComplex k = join(assoc_build(n).complex, SimplicialComplex::simplex(m, "y"));
    T1Basis basis = t1_basis(n, m);
    std::set<std::pair<Mask, Mask>> seen;
    for (const auto& set : basis.sets) {
        for (const auto& e : set) {
            Mask a = k.face_mask(e.numerator);      // support of the numerator
            Mask b = k.face_mask(e.denominator);
            CHECK(k.contains(a));
            CHECK(t_piece(k, 1, a & ~b, b) == 1);
            seen.insert({a, b});
        }
    }
    // distinct degree-0 tangent vectors
    CHECK(static_cast<long long>(seen.size()) == basis.total());
    // the count of module generators is the number of inscribed quadrangles
    long long quadrangles = 0;
    for (const auto& p : candidate_pairs(k))
        if (!p.b_is_face && p.a == 0 && popcount(p.b) == 2) ++quadrangles;
    CHECK(quadrangles == binomial(n, 4).convert_to<long long>());
}

TEST_CASE("default unstar plan") {
    UnstarPlan plan = default_unstar_plan(7, 5);
    REQUIRE(plan.order.size() == 4);  // (n-r)(r-3) = 2*2
    CHECK(plan.order.front() == Diagonal{3, 7});
    CHECK(plan.order.back() == Diagonal{4, 6});
}

TEST_CASE("unstar sequences terminate at joins") {
    // n=6, r=5: two unstarrings, landing on the 5+4 join through the
    // 8-vertex sphere
    auto seq = unstar_sequence(default_unstar_plan(6, 5));
    REQUIRE(seq.size() == 3);
    CHECK(isomorphic(seq[1], deltahedron(8)));
    CHECK(isomorphic(seq[2], deltahedron(7)));

    for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 4}, {6, 4}, {7, 4}, {7, 5}, {7, 6}}) {
        auto s = unstar_sequence(default_unstar_plan(n, r));
        CHECK(s.size() == 1 + static_cast<std::size_t>((n - r) * (r - 3)));
        for (const auto& k : s) {
            CHECK(k.is_flag());
            CHECK(is_homology_sphere(k));
        }
    }
}

TEST_CASE("unstar facet count formula") {
    // after unstarring δ_ij the facet count drops by a_i a_{n-j+3} a_{j-i+1}
    for (auto [n, r] : std::vector<std::pair<int, int>>{{6, 5}, {7, 5}, {7, 4}}) {
        UnstarPlan plan = default_unstar_plan(n, r);
        auto seq = unstar_sequence(plan);
        auto a = [&](int k) { return polygon_triangulations(k); };
        Int expect = a(n);
        for (std::size_t step = 0; step < plan.order.size(); ++step) {
            auto d = plan.order[step];
            expect -= a(d.i) * a(n - d.j + 3) * a(d.j - d.i + 1);
            CHECK(static_cast<long long>(seq[step + 1].facets().size()) ==
                  expect.convert_to<long long>());
        }
    }
}

TEST_CASE("alternate unstar orders run when they respect the dominance order") {
    // for (7,5) the diagonals (4,7) and (3,6) commute; both interleavings work
    UnstarPlan alt;
    alt.n = 7;
    alt.r = 5;
    alt.order = {{3, 7}, {3, 6}, {4, 7}, {4, 6}};
    auto seq = unstar_sequence(alt);
    CHECK(seq.size() == 5);
    for (const auto& k : seq) CHECK(is_homology_sphere(k));
    // the default order gives the same terminal class
    auto def = unstar_sequence(default_unstar_plan(7, 5));
    CHECK(isomorphic(seq.back(), def.back()));
}

TEST_CASE("unstar order matters") {
    // the short diagonal d4_6 cannot be unstarred before d3_6: its link is
    // still a pentagon, which is no suspension
    UnstarPlan bad;
    bad.n = 6;
    bad.r = 5;
    bad.order = {{4, 6}, {3, 6}};
    CHECK_THROWS_AS(unstar_sequence(bad), const UnstarBlocked&);
}

TEST_CASE("degree-0 tangent dimension equals the basis size") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 1}, {6, 0}}) {
        SimplicialComplex k = m < 0 ? assoc_build(n).complex
                                    : join(assoc_build(n).complex,
                                           SimplicialComplex::simplex(m, "y"));
        CHECK(t1_degree_zero_dim(k) == t1_basis(n, m).total());
    }
}

TEST_CASE("hyperoct chains") {
    // (4,4,4) from the hexagon: terminal is the octahedron
    auto seq = hyperoct_chain({4, 4, 4});
    SimplicialComplex oct = join(join(SimplicialComplex::two_points("a1", "a2"),
                                      SimplicialComplex::two_points("b1", "b2")),
                                 SimplicialComplex::two_points("c1", "c2"));
    CHECK(isomorphic(seq.back(), oct));

    // (4,4,5) from the 7-gon
    auto seq2 = hyperoct_chain({4, 4, 5});
    SimplicialComplex expect = join(join(assoc_build(4).complex, assoc_build(4).complex),
                                    assoc_build(5).complex);
    CHECK(isomorphic(seq2.back(), expect));

    // (4,4,4,4) from the 7-gon: the 3-dimensional hyperoctahedron
    auto seq3 = hyperoct_chain({4, 4, 4, 4});
    SimplicialComplex hyper = join(oct, SimplicialComplex::two_points("d1", "d2"));
    CHECK(isomorphic(seq3.back(), hyper));
    CHECK(seq3.back().vertex_count() == 8);

    // a single part never satisfies n > r; undersized parts are rejected too
    CHECK_THROWS_AS(hyperoct_chain({4}), const InvalidPartition&);
    CHECK_THROWS_AS(hyperoct_chain({3, 5}), const InvalidPartition&);
}

TEST_CASE("edge starring series") {
    // n=6: one starring, isomorphic to the 10-vertex deltahedron
    auto seq = c_n_series(6);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0].vertex_count() == 10);
    CHECK(isomorphic(seq[0], deltahedron(10)));

    // n=7: two intermediate complexes, flag at every step
    auto seq7 = c_n_series(7);
    REQUIRE(seq7.size() == 2);
    for (const auto& k : seq7) {
        CHECK(k.is_flag());
        CHECK(is_homology_sphere(k));
    }
    // they match the first catalogue rows of the 7-gon search lineage
    auto replayed = replay_table();
    CHECK(isomorphic(seq7[0], replayed.at("K2")));
    CHECK(isomorphic(seq7[1], replayed.at("K7")));
}
