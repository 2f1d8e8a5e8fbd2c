#include <doctest.h>

#include <algorithm>
#include <random>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/hypergraph.hpp"
#include "srdef/ideal.hpp"
#include "srdef/spheres.hpp"

using namespace srdef;

namespace {

RationalPoly from_fracs(const std::vector<std::pair<long long, long long>>& cs) {
    RationalPoly p;
    for (auto [num, den] : cs) p.c.push_back(Rational(num) / Rational(den));
    p.trim();
    return p;
}

}  // namespace

TEST_CASE("sr_ideal") {
    SimplicialComplex s0 = SimplicialComplex::two_points("x0", "x1");
    auto ideal = sr_ideal(s0);
    REQUIRE(ideal.generators.size() == 1);
    CHECK(ideal.generator_labels()[0] == std::vector<std::string>{"x0", "x1"});

    CHECK(sr_ideal(assoc_build(6).complex).generators.size() == 15);
    CHECK(sr_ideal(SimplicialComplex::simplex(4, "s")).generators.empty());
}

TEST_CASE("complex_of_ideal") {
    SquarefreeMonomialIdeal ideal;
    ideal.variables = {"x0", "x1"};
    ideal.generators = {Mask(3)};
    SimplicialComplex k = complex_of_ideal(ideal);
    CHECK(k.vertex_count() == 2);
    CHECK(k.dim() == 0);

    // round trip on random flag complexes and the polygon complexes
    std::mt19937 rng(9);
    std::vector<SimplicialComplex> samples = {assoc_build(5).complex, assoc_build(6).complex,
                                              deltahedron(8)};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int t = 0; t < 4; ++t) {
        std::vector<std::string> labels;
        for (int i = 0; i < 6; ++i) labels.push_back("w" + std::to_string(i));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (coin(rng) < 0.5) edges.push_back({i, j});
        samples.push_back(SimplicialComplex::clique_complex(labels, edges));
    }
    // include a non-flag example to exercise the transversal path
    samples.push_back(SimplicialComplex::boundary_simplex(3, "p"));
    for (const auto& k2 : samples) {
        SimplicialComplex back = complex_of_ideal(sr_ideal(k2));
        CHECK(canonical_form(back) == canonical_form(k2));
    }
}

TEST_CASE("minimal transversals match brute force") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> nedges(1, 8);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 8;
        std::vector<Mask> edges;
        int m = nedges(rng);
        for (int e = 0; e < m; ++e) {
            Mask mask = 0;
            std::uniform_int_distribution<int> sz(1, 3);
            int s = sz(rng);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int q = 0; q < s; ++q) mask |= Mask(1) << pick(rng);
            edges.push_back(mask);
        }
        auto fast = minimal_transversals(n, edges);
        // brute force over all subsets
        std::vector<Mask> oracle;
        for (Mask s = 0; s < (Mask(1) << n); ++s) {
            bool covers = true;
            for (Mask e : edges)
                if ((e & s) == 0) covers = false;
            if (!covers) continue;
            bool minimal = true;
            for_bits(s, [&](int v) {
                if (!minimal) return;
                Mask t = s & ~(Mask(1) << v);
                bool still = true;
                for (Mask e : edges)
                    if ((e & t) == 0) still = false;
                if (still) minimal = false;
            });
            if (minimal) oracle.push_back(s);
        }
        std::sort(oracle.begin(), oracle.end());
        CHECK(fast == oracle);
    }
}

TEST_CASE("degree") {
    for (int g = 6; g <= 10; ++g) CHECK(degree(deltahedron(g + 1)) == 2 * (g - 1));
    CHECK(degree(assoc_build(6).complex) == 14);
    // joining a simplex preserves the facet count
    SimplicialComplex k = assoc_build(5).complex;
    CHECK(degree(join(k, SimplicialComplex::simplex(3, "q"))) == degree(k));
    CHECK_THROWS_AS(degree(SimplicialComplex::from_facets({{"a", "b"}, {"c"}})), const NotPure&);
}

TEST_CASE("sr ideal of a join is the union") {
    SimplicialComplex a = assoc_build(5).complex;
    SimplicialComplex b = SimplicialComplex::two_points("u", "w");
    auto ja = sr_ideal(a).generator_labels();
    auto jb = sr_ideal(b).generator_labels();
    auto jj = sr_ideal(join(a, b)).generator_labels();
    CHECK(jj.size() == ja.size() + jb.size());
}

TEST_CASE("hilbert polynomial of the cone over a 3-sphere") {
    // 15 vertices, 47 facets
    SimplicialComplex k1 = replay_table().at("K1");
    REQUIRE(k1.vertex_count() == 15);
    REQUIRE(k1.facets().size() == 47);
    RationalPoly p = hilbert_poly_fano4(k1);
    CHECK(p == from_fracs({{1, 1}, {43, 12}, {133, 24}, {47, 12}, {47, 24}}));
    CHECK(p == hilbert_polynomial(join(k1, SimplicialComplex::simplex(0, "q"))));

    SimplicialComplex bd4 = SimplicialComplex::boundary_simplex(4, "p");
    RationalPoly q = hilbert_poly_fano4(bd4);
    CHECK(q == from_fracs({{1, 1}, {25, 12}, {55, 24}, {5, 12}, {5, 24}}));
    CHECK(q == hilbert_polynomial(join(bd4, SimplicialComplex::simplex(0, "q"))));

    SimplicialComplex k74 = replay_table().at("K74");
    REQUIRE(k74.vertex_count() == 22);
    REQUIRE(k74.facets().size() == 77);
    RationalPoly r = hilbert_poly_fano4(k74);
    CHECK(r == from_fracs({{1, 1}, {55, 12}, {187, 24}, {77, 12}, {77, 24}}));
    CHECK(r == hilbert_polynomial(join(k74, SimplicialComplex::simplex(0, "q"))));

    // normalized leading coefficient = facet count
    CHECK(r.coeff(4) * 24 == Rational(77));
    CHECK_THROWS_AS(hilbert_poly_fano4(assoc_build(6).complex), const NotPure&);
}

TEST_CASE("hilbert series numerator and polynomial consistency") {
    // for the pentagon boundary: H(t) numerator over (1-t)^2
    SimplicialComplex c5 = assoc_build(5).complex;
    RationalPoly num = hilbert_series_numerator(c5);
    // h-polynomial of a cycle of length 5: 1 + 3t + t^2
    RationalPoly expect;
    expect.c = {1, 3, 1};
    CHECK(num == expect);

    // Hilbert polynomial evaluates the Hilbert function for m >= 1:
    // dim A_m of the pentagon ring = 5m for m >= 1
    RationalPoly p = hilbert_polynomial(c5);
    for (int m = 1; m <= 5; ++m) CHECK(p.eval(m) == Rational(5 * m));

    // normalized leading coefficient counts the facets on pure complexes
    for (const auto& k : {assoc_build(6).complex, deltahedron(8),
                          join(assoc_build(5).complex, SimplicialComplex::simplex(1, "q"))}) {
        RationalPoly h = hilbert_polynomial(k);
        CHECK(h.coeff(h.degree()) * factorial(k.dim()) ==
              Rational(static_cast<long long>(k.facets().size())));
    }
}
