#include <doctest.h>

#include <set>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/degen.hpp"
#include "srdef/ideal.hpp"
#include "srdef/spheres.hpp"

using namespace srdef;

namespace {

Polynomial var(const VarTable& v, const std::string& n) {
    return Polynomial::variable(v.id(n));
}

}  // namespace

TEST_CASE("pfaffian4") {
    VarTable v;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            v.add("x" + std::to_string(i) + std::to_string(j));
    auto entry = [&](int i, int j) {
        return Polynomial::variable(v.id("x" + std::to_string(i) + std::to_string(j)));
    };
    Polynomial pf = pfaffian4(entry, 1, 2, 3, 4);
    Polynomial expect = var(v, "x12") * var(v, "x34") - var(v, "x13") * var(v, "x24") +
                        var(v, "x14") * var(v, "x23");
    CHECK(pf == expect);

    // a zero entry kills terms
    auto entry0 = [&](int i, int j) {
        if (i == 1 && j == 2) return Polynomial::zero();
        return entry(i, j);
    };
    Polynomial pf0 = pfaffian4(entry0, 1, 2, 3, 4);
    CHECK(pf0.terms.size() == 2);
}

TEST_CASE("binomial matrix entries expand") {
    GeneratorSet gs = generator_set(10);
    CHECK(gs.polys.size() == 35);
    // rows {2,3,5,6}: -uv + rw + r^2 + z0 z1
    auto V = [&](const std::string& n) { return Polynomial::variable(gs.vars.id(n)); };
    Polynomial expect = Polynomial::constant(-1) * V("u") * V("v") + V("r") * V("w") +
                        V("r") * V("r") + V("z0") * V("z1");
    bool found = false;
    for (const auto& p : gs.polys) found = found || (p == expect);
    CHECK(found);
    // every coefficient is ±1 except the r^2-style collisions stay integral
    for (const auto& p : gs.polys)
        for (const auto& [m, c] : p.terms) CHECK((c == 1 || c == -1));
}

TEST_CASE("generator counts") {
    CHECK(generator_set(6).polys.size() == 6);  // 5 Pfaffians + the degenerate quadric
    CHECK(generator_set(7).polys.size() == 10);
    CHECK(generator_set(8).polys.size() == 15);
    CHECK(generator_set(9).polys.size() == 21);
    CHECK(generator_set(9).vars.size() == 14);
    CHECK(generator_set(10).vars.size() == 14);
    CHECK(generator_set(7).vars.size() == 16);
}

TEST_CASE("solve_order") {
    // circular order for the 5-gon exists and selects the crossing monomials
    GeneratorSet gs = generator_set(6);
    TermOrder order = solve_order(gs.vars, gs.order_constraints);
    CHECK(order_certified(order));
    auto initials = initial_monomials(gs.polys, order, gs.vars);
    // the first five generators are the Pfaffians; their leads are x_ik x_jl
    int idx = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k)
                for (int l = k + 1; l <= 5; ++l) {
                    Monomial expect = {{gs.vars.id("x" + std::to_string(i) + std::to_string(k)), 1},
                                       {gs.vars.id("x" + std::to_string(j) + std::to_string(l)), 1}};
                    std::sort(expect.begin(), expect.end());
                    CHECK(initials[idx] == expect);
                    ++idx;
                }

    // infeasible systems are reported
    VarTable v;
    v.add("a");
    v.add("b");
    Monomial ma = {{0, 1}}, mb = {{1, 1}};
    CHECK_THROWS_AS(solve_order(v, {{ma, mb}, {mb, ma}}), const Infeasible&);
}

TEST_CASE("tie detection") {
    VarTable v;
    v.add("a");
    v.add("b");
    TermOrder order;
    order.weights = {1, 1};
    Polynomial p = Polynomial::variable(0) + Polynomial::variable(1);
    CHECK_THROWS_AS(initial_monomials({p}, order, v), const TieDetected&);
}

TEST_CASE("sz_certify hand case") {
    // a single Pfaffian of the 4-gon: support {x13, x24}, transversals {x13}, {x24}
    VarTable v;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) v.add("x" + std::to_string(i) + std::to_string(j));
    Monomial lead = {{v.id("x13"), 1}, {v.id("x24"), 1}};
    std::sort(lead.begin(), lead.end());
    // expected: the 4-gon diagonal pair joined with the simplex on the rest
    SimplicialComplex expected =
        join(SimplicialComplex::two_points("x13", "x24"), SimplicialComplex::simplex(3, "q"));
    SzCertificate cert = sz_certify({lead}, v, expected, 2);
    CHECK(cert.pass);
    CHECK(cert.transversal_count == 2);
    CHECK(cert.transversal_cardinality == 1);

    // mixed cardinality is rejected
    VarTable w;
    w.add("x");
    w.add("y");
    w.add("z");
    Monomial m1 = {{w.id("x"), 1}, {w.id("y"), 1}};
    Monomial m2 = {{w.id("x"), 1}, {w.id("z"), 1}};
    SzCertificate bad = sz_certify(
        {m1, m2}, w, join(SimplicialComplex::two_points("p", "q"), SimplicialComplex::simplex(0, "r")),
        10);
    CHECK_FALSE(bad.pass);
    CHECK(bad.reason == "mixed-cardinality");

    // too many minimal primes for the degree bound
    SzCertificate over = sz_certify({lead}, v, expected, 1);
    CHECK_FALSE(over.pass);
    CHECK(over.reason == "count>d");

    // right dimension and codimension, wrong complex
    SzCertificate wrong = sz_certify(
        {lead}, v,
        join(SimplicialComplex::boundary_simplex(2, "p"), SimplicialComplex::simplex(2, "r")), 3);
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.reason == "wrong-complex");
}

TEST_CASE("degeneration certificates for the Grassmannian cases") {
    DegenCertificate c6 = certify_degeneration(6);
    CHECK(c6.pass);
    CHECK(c6.sz.transversal_count == 10);
    CHECK(c6.initials.size() == 6);

    DegenCertificate c8 = certify_degeneration(8);
    CHECK(c8.pass);
    CHECK(c8.sz.transversal_count == 14);

    // any valid quadric pair gives the same certified outcome
    DegenCertificate c6b = certify_degeneration(6, std::nullopt, std::make_pair(std::string("x23"),
                                                                                std::string("x45")));
    CHECK(c6b.pass);
    CHECK_THROWS_AS(
        certify_degeneration(6, std::nullopt, std::make_pair(std::string("x13"), std::string("x24"))),
        const Error&);
}

TEST_CASE("pfaffian initial complex of the five-point ring") {
    // without the extra quadric, the crossing monomials cut out the pentagon
    // complex joined with the simplex on the remaining variables
    GeneratorSet gs = generator_set(6);
    std::vector<Polynomial> pfaffians(gs.polys.begin(), gs.polys.begin() + 5);
    TermOrder order = solve_order(gs.vars, gs.order_constraints);
    auto initials = initial_monomials(pfaffians, order, gs.vars);
    SquarefreeMonomialIdeal ideal;
    ideal.variables = gs.vars.names;
    for (const auto& m : initials) {
        Mask s = 0;
        for (auto [v, e] : m) s |= Mask(1) << v;
        ideal.generators.push_back(s);
    }
    SimplicialComplex k = complex_of_ideal(ideal);
    SimplicialComplex expect = join(assoc_build(5).complex, SimplicialComplex::simplex(4, "q"));
    CHECK(isomorphic(k, expect));
}

TEST_CASE("versal family at zero parameters") {
    for (int m : {-1, 0, 2}) {
        VersalParams params;
        params.r.assign(6, std::vector<long long>(std::max(m + 1, 0), 0));
        auto eqs = versal_a6(m, params);
        REQUIRE(eqs.size() == 15);
        // each equation reduces to a single squarefree quadratic monomial
        std::set<std::set<std::string>> monomials;
        VersalFamily fam = versal_a6_symbolic(m);
        for (const auto& eq : eqs) {
            REQUIRE(eq.terms.size() == 1);
            const auto& [mono, coeff] = *eq.terms.begin();
            CHECK(coeff == 1);
            CHECK(mono_squarefree(mono));
            CHECK(mono_total_degree(mono) == 2);
            std::set<std::string> names;
            for (auto [vid, e] : mono) names.insert(fam.vars.names[vid]);
            monomials.insert(names);
        }
        CHECK(monomials.size() == 15);
        // they are exactly the minimal non-faces of the join
        SimplicialComplex k = join(assoc_build(6).complex, SimplicialComplex::simplex(m, "y"));
        std::set<std::set<std::string>> expect;
        for (const auto& g : sr_ideal(k).generator_labels())
            expect.insert(std::set<std::string>(g.begin(), g.end()));
        CHECK(monomials == expect);
    }
}

TEST_CASE("versal family with u = 0 keeps the three-term heads") {
    int m = 0;
    VersalFamily fam = versal_a6_symbolic(m);
    VersalParams params;
    params.r.assign(6, std::vector<long long>(m + 1));
    // generic small integers for t, r, s; u stays zero
    long long seed = 1;
    for (int i = 0; i < 6; ++i) {
        for (int l = 0; l < 3; ++l) params.t[i][l] = (seed++ % 5) + 1;
        params.r[i][0] = (seed++ % 4) + 1;
    }
    for (int i = 0; i < 3; ++i) params.s[i] = (seed++ % 3) + 1;
    auto eqs = versal_a6(m, params);

    // substitute the same values into the symbolic first-three-term sums
    std::map<int, long long> values;
    for (int i = 1; i <= 6; ++i)
        for (int l = 1; l <= 3; ++l)
            values[fam.vars.id("t" + std::to_string(i) + "_" + std::to_string(l))] =
                params.t[i - 1][l - 1];
    for (int i = 1; i <= 6; ++i)
        values[fam.vars.id("r" + std::to_string(i) + "_0")] = params.r[i - 1][0];
    for (int i = 1; i <= 6; ++i) values[fam.vars.id("u" + std::to_string(i))] = 0;
    for (int i = 1; i <= 3; ++i)
        values[fam.vars.id("s" + std::to_string(i))] = params.s[i - 1];
    for (std::size_t e = 0; e < fam.equation_terms.size(); ++e) {
        Polynomial head;
        for (int t = 0; t < 3; ++t) head += fam.equation_terms[e][t];
        CHECK(substitute(head, values) == eqs[e]);
    }
}

TEST_CASE("versal family is weighted homogeneous") {
    // weights: ring variables 1, t and r parameters -1, u and s parameters 0
    for (int m : {-1, 1}) {
        VersalFamily fam = versal_a6_symbolic(m);
        std::vector<int> weight(fam.vars.size(), 0);
        for (int id : fam.ring_var_ids) weight[id] = 1;
        for (int id : fam.param_ids) {
            const std::string& n = fam.vars.names[id];
            weight[id] = (n[0] == 't' || n[0] == 'r') ? -1 : 0;
        }
        for (const auto& terms : fam.equation_terms) {
            Polynomial eq;
            for (const auto& t : terms) eq += t;
            for (const auto& [mono, c] : eq.terms) {
                int w = 0;
                for (auto [vid, e] : mono) w += weight[vid] * e;
                CHECK(w == 2);
            }
        }
    }
}
