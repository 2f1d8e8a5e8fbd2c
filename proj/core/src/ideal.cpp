#include "srdef/ideal.hpp"

#include <algorithm>

#include "srdef/hypergraph.hpp"

namespace srdef {

std::vector<std::vector<std::string>> SquarefreeMonomialIdeal::generator_labels() const {
    std::vector<std::vector<std::string>> out;
    for (Mask g : generators) {
        std::vector<std::string> m;
        for_bits(g, [&](int v) { m.push_back(variables[v]); });
        out.push_back(std::move(m));
    }
    return out;
}

SquarefreeMonomialIdeal sr_ideal(const SimplicialComplex& k) {
    SquarefreeMonomialIdeal ideal;
    ideal.variables = k.labels();
    ideal.generators = k.minimal_nonfaces();
    return ideal;
}

SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal) {
    int n = static_cast<int>(ideal.variables.size());
    if (n > 64) throw SizeLimit("too many variables");

    // vertices whose variable alone generates are not faces at all
    Mask dead = 0;
    std::vector<Mask> gens;
    for (Mask g : ideal.generators) {
        if (g == 0) throw Error("complex_of_ideal: the ideal contains 1");
        if (popcount(g) == 1)
            dead |= g;
        else
            gens.push_back(g);
    }
    Mask universe = (n == 64 ? ~Mask(0) : (Mask(1) << n) - 1) & ~dead;
    std::vector<Mask> live_gens;
    for (Mask g : gens)
        if (subset(g, universe)) live_gens.push_back(g);

    std::vector<Mask> facets;
    bool all_quadratic = std::all_of(live_gens.begin(), live_gens.end(),
                                     [](Mask g) { return popcount(g) == 2; });
    if (all_quadratic) {
        // clique complex of the complement graph of the generators
        std::unordered_set<Mask> forbidden(live_gens.begin(), live_gens.end());
        std::vector<std::pair<int, int>> edges;
        std::vector<int> verts;
        for_bits(universe, [&](int v) { verts.push_back(v); });
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                Mask e = (Mask(1) << verts[i]) | (Mask(1) << verts[j]);
                if (!forbidden.count(e)) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
        std::vector<std::string> live_labels;
        for (int v : verts) live_labels.push_back(ideal.variables[v]);
        return SimplicialComplex::clique_complex(live_labels, edges);
    }

    // facets are complements (inside the universe) of minimal transversals
    std::vector<Mask> trans = minimal_transversals(n, live_gens);
    for (Mask t : trans) facets.push_back(universe & ~t);
    if (facets.empty()) facets.push_back(universe);  // no generators: the full simplex
    return SimplicialComplex::from_facet_masks(ideal.variables, facets);
}

long long degree(const SimplicialComplex& k) {
    if (!k.pure()) throw NotPure("degree needs a pure complex");
    return static_cast<long long>(k.facets().size());
}

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

RationalPoly poly_scale(const RationalPoly& a, const Rational& s) {
    RationalPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

RationalPoly hilbert_series_numerator(const SimplicialComplex& k) {
    int d = k.dim();
    FVector fv = k.f_vector();
    RationalPoly num;
    for (int i = 0; i <= d + 1; ++i) {
        // f_{i-1} t^i (1-t)^{d+1-i}
        RationalPoly term;
        term.c.assign(i + 1, 0);
        term.c[i] = Rational(fv.counts[i]);
        RationalPoly one_minus_t;
        one_minus_t.c = {1, -1};
        for (int j = 0; j < d + 1 - i; ++j) term = poly_mul(term, one_minus_t);
        num = poly_add(num, term);
    }
    return num;
}

RationalPoly hilbert_polynomial(const SimplicialComplex& k) {
    int d = k.dim();
    FVector fv = k.f_vector();
    RationalPoly p;
    for (int i = 1; i <= d + 1; ++i) {
        // f_{i-1} * C(t-1, i-1) = f_{i-1}/(i-1)! * Π_{j=1}^{i-1} (t - j)
        RationalPoly term;
        term.c = {1};
        for (int j = 1; j <= i - 1; ++j) {
            RationalPoly lin;
            lin.c = {Rational(-j), 1};
            term = poly_mul(term, lin);
        }
        term = poly_scale(term, Rational(fv.counts[i]) / Rational(factorial(i - 1)));
        p = poly_add(p, term);
    }
    return p;
}

RationalPoly hilbert_poly_fano4(const SimplicialComplex& k) {
    if (!k.pure() || k.dim() != 3) throw NotPure("hilbert_poly_fano4 needs a pure 3-dimensional complex");
    Rational f0 = k.vertex_count();
    Rational f3 = static_cast<long long>(k.facets().size());
    RationalPoly p;
    p.c = {1, f0 / 2 - f3 / 12, f0 / 2 - f3 / 24, f3 / 12, f3 / 24};
    return p;
}

}  // namespace srdef
