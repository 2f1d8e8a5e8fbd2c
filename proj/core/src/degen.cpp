#include "srdef/degen.hpp"

#include <algorithm>
#include <set>

#include "srdef/assoc.hpp"
#include "srdef/canonical.hpp"
#include "srdef/homology.hpp"
#include "srdef/hypergraph.hpp"
#include "srdef/ideal.hpp"
#include "srdef/spheres.hpp"

namespace srdef {

namespace {

Monomial mono_of(const VarTable& vars, const std::vector<std::string>& names) {
    std::map<int, int> exps;
    for (const auto& n : names) ++exps[vars.id(n)];
    Monomial m;
    for (auto [v, e] : exps) m.push_back({v, e});
    return m;
}

std::string xn(int i, int j) {
    if (i > j) std::swap(i, j);
    return "x" + std::to_string(i) + std::to_string(j);
}

/// Circular comparisons: the crossing monomial beats the other two Pfaffian
/// terms for every i<j<k<l.
void add_circular(const VarTable& vars, int n,
                  std::vector<std::pair<Monomial, Monomial>>& out) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    Monomial lead = mono_of(vars, {xn(i, k), xn(j, l)});
                    out.push_back({lead, mono_of(vars, {xn(i, j), xn(k, l)})});
                    out.push_back({lead, mono_of(vars, {xn(i, l), xn(j, k)})});
                }
}

void add_group_chain(const VarTable& vars, const std::vector<std::vector<std::string>>& groups,
                     std::vector<std::pair<Monomial, Monomial>>& out) {
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t h = g + 1; h < groups.size(); ++h)
            for (const auto& lo : groups[g])
                for (const auto& hi : groups[h])
                    out.push_back({mono_of(vars, {hi}), mono_of(vars, {lo})});
}

/// mid*mid beats hi*lo for every combination.
void add_product_rule(const VarTable& vars, const std::vector<std::string>& lo,
                      const std::vector<std::string>& mid, const std::vector<std::string>& hi,
                      std::vector<std::pair<Monomial, Monomial>>& out) {
    for (std::size_t a = 0; a < mid.size(); ++a)
        for (std::size_t b = a; b < mid.size(); ++b)
            for (const auto& g : hi)
                for (const auto& d : lo)
                    out.push_back({mono_of(vars, {mid[a], mid[b]}), mono_of(vars, {g, d})});
}

/// Quadratic monomials compare by group signature:
///   hi*hi > hi*mid > mid*mid > hi*lo > mid*lo > lo*lo,
/// leaving only same-signature comparisons (the boxed ones) open. Together
/// with the mid*mid > hi*lo rule this pins every other leading term.
void add_signature_rules(const VarTable& vars, const std::vector<std::string>& lo,
                         const std::vector<std::string>& mid, const std::vector<std::string>& hi,
                         std::vector<std::pair<Monomial, Monomial>>& out) {
    auto pairs = [&](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<Monomial> ms;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = (&a == &b ? i : 0); j < b.size(); ++j)
                ms.push_back(mono_of(vars, {a[i], b[j]}));
        return ms;
    };
    auto dominate = [&](const std::vector<Monomial>& big, const std::vector<Monomial>& small) {
        for (const auto& m1 : big)
            for (const auto& m2 : small) out.push_back({m1, m2});
    };
    auto hh = pairs(hi, hi), hm = pairs(hi, mid), mm = pairs(mid, mid), hl = pairs(hi, lo),
         ml = pairs(mid, lo), ll = pairs(lo, lo);
    dominate(hh, hm);
    dominate(hm, mm);
    dominate(mm, hl);
    dominate(hl, ml);
    dominate(ml, ll);
}

GeneratorSet grassmann_set(int genus, int n) {
    GeneratorSet gs;
    gs.genus = genus;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gs.vars.add(xn(i, j));
    auto entry = [&](int i, int j) { return Polynomial::variable(gs.vars.id(xn(i, j))); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    gs.polys.push_back(pfaffian4(entry, i, j, k, l));
    add_circular(gs.vars, n, gs.order_constraints);
    gs.ideal_degree = 2LL * (genus - 1);
    return gs;
}

GeneratorSet build_g6(const std::optional<std::pair<std::string, std::string>>& quadric) {
    GeneratorSet gs = grassmann_set(6, 5);
    gs.delta_dim = 2;
    // the extra quadric degenerates to a product of two variables that avoid
    // the crossing monomials
    std::set<std::string> used;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k)
                for (int l = k + 1; l <= 5; ++l) {
                    used.insert(xn(i, k));
                    used.insert(xn(j, l));
                }
    std::vector<std::string> avail;
    for (const auto& nm : gs.vars.names)
        if (!used.count(nm)) avail.push_back(nm);
    std::sort(avail.begin(), avail.end());
    std::string a, b;
    if (quadric) {
        a = quadric->first;
        b = quadric->second;
        if (a == b || used.count(a) || used.count(b))
            throw Error("quadric variables must be distinct and absent from the initial monomials");
        gs.vars.id(a);
        gs.vars.id(b);
    } else {
        a = avail.at(0);
        b = avail.at(1);
    }
    Polynomial q = Polynomial::variable(gs.vars.id(a)) * Polynomial::variable(gs.vars.id(b));
    gs.polys.push_back(q);
    return gs;
}

GeneratorSet build_g7() {
    GeneratorSet gs;
    gs.genus = 7;
    gs.delta_dim = 7;
    gs.ideal_degree = 12;
    gs.vars.add("u");
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) gs.vars.add(xn(i, j));
    for (int k = 1; k <= 5; ++k) gs.vars.add("y" + std::to_string(k));
    auto xv = [&](int i, int j) {
        Polynomial p = Polynomial::variable(gs.vars.id(xn(std::min(i, j), std::max(i, j))));
        return i < j ? p : Polynomial::constant(-1) * p;
    };
    auto yv = [&](int k) { return Polynomial::variable(gs.vars.id("y" + std::to_string(k))); };
    Polynomial u = Polynomial::variable(gs.vars.id("u"));

    // u y_i - (-1)^i Pf(rows != i)
    for (int i = 1; i <= 5; ++i) {
        std::vector<int> rows;
        for (int r = 1; r <= 5; ++r)
            if (r != i) rows.push_back(r);
        auto entry = [&](int a, int b) { return xv(a, b); };
        Polynomial phi = pfaffian4(entry, rows[0], rows[1], rows[2], rows[3]);
        Polynomial eq = u * yv(i) - ((i % 2 == 0) ? phi : Polynomial::constant(-1) * phi);
        gs.polys.push_back(eq);
    }
    // rows of the antisymmetric matrix applied to y
    for (int i = 1; i <= 5; ++i) {
        Polynomial eq;
        for (int j = 1; j <= 5; ++j) {
            if (j == i) continue;
            eq += xv(i, j) * yv(j);
        }
        gs.polys.push_back(eq);
    }

    add_circular(gs.vars, 5, gs.order_constraints);
    add_group_chain(gs.vars,
                    {{"u", "y2", "y3", "y4"},
                     {"y1", "y5"},
                     {"x12", "x13", "x14", "x15", "x23", "x24", "x25", "x34", "x35", "x45"}},
                    gs.order_constraints);
    // The group conditions alone leave the leading terms of the matrix rows
    // open; pin them so the initial complex is the starred 8-vertex sphere.
    auto pin = [&](const std::string& wa, const std::string& wb,
                   std::vector<std::vector<std::string>> losers) {
        for (auto& l : losers)
            gs.order_constraints.push_back({mono_of(gs.vars, {wa, wb}), mono_of(gs.vars, l)});
    };
    pin("x15", "y5", {{"x12", "y2"}, {"x13", "y3"}, {"x14", "y4"}});
    pin("x25", "y5", {{"x12", "y1"}, {"x23", "y3"}, {"x24", "y4"}});
    pin("x35", "y5", {{"x13", "y1"}, {"x23", "y2"}, {"x34", "y4"}});
    pin("x14", "y1", {{"x24", "y2"}, {"x34", "y3"}, {"x45", "y5"}});
    pin("x15", "y1", {{"x25", "y2"}, {"x35", "y3"}, {"x45", "y4"}});
    return gs;
}

GeneratorSet build_g8() {
    GeneratorSet gs = grassmann_set(8, 6);
    gs.delta_dim = 5;
    return gs;
}

GeneratorSet build_g9() {
    GeneratorSet gs;
    gs.genus = 9;
    gs.delta_dim = 3;
    gs.ideal_degree = 16;
    gs.vars.add("u");
    gs.vars.add("v");
    auto sym = [&](char c, int i, int j) {
        if (i > j) std::swap(i, j);
        return std::string(1, c) + std::to_string(i) + std::to_string(j);
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) gs.vars.add(sym('y', i, j));
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) gs.vars.add(sym('z', i, j));
    auto Y = [&](int i, int j) { return Polynomial::variable(gs.vars.id(sym('y', i, j))); };
    auto Z = [&](int i, int j) { return Polynomial::variable(gs.vars.id(sym('z', i, j))); };
    Polynomial u = Polynomial::variable(gs.vars.id("u"));
    Polynomial v = Polynomial::variable(gs.vars.id("v"));

    auto minor = [&](auto mat, int i, int j) {
        std::vector<int> rows, cols;
        for (int a = 1; a <= 3; ++a) {
            if (a != i) rows.push_back(a);
            if (a != j) cols.push_back(a);
        }
        return mat(rows[0], cols[0]) * mat(rows[1], cols[1]) -
               mat(rows[0], cols[1]) * mat(rows[1], cols[0]);
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            Polynomial m = minor(Y, i, j);
            if ((i + j) % 2 == 1) m = Polynomial::constant(-1) * m;
            gs.polys.push_back(m - v * Z(i, j));
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            Polynomial m = minor(Z, i, j);
            if ((i + j) % 2 == 1) m = Polynomial::constant(-1) * m;
            gs.polys.push_back(m - u * Y(i, j));
        }
    for (int i = 1; i <= 3; ++i) {
        Polynomial eq;
        for (int k = 1; k <= 3; ++k) eq += Y(i, k) * Z(k, i);
        gs.polys.push_back(eq - u * v);
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            Polynomial eq;
            for (int k = 1; k <= 3; ++k) eq += Y(i, k) * Z(k, j);
            gs.polys.push_back(eq);
        }

    std::vector<std::string> lo = {"u", "v", "y13", "z13"};
    std::vector<std::string> mid = {"y12", "y23", "z12", "z23"};
    std::vector<std::string> hi = {"y11", "y22", "y33", "z11", "z22", "z33"};
    add_group_chain(gs.vars, {lo, mid, hi}, gs.order_constraints);
    add_product_rule(gs.vars, lo, mid, hi, gs.order_constraints);
    add_signature_rules(gs.vars, lo, mid, hi, gs.order_constraints);

    gs.free_choices = {
        {mono_of(gs.vars, {"y11", "z12"}), mono_of(gs.vars, {"y12", "z22"})},
        {mono_of(gs.vars, {"y22", "z12"}), mono_of(gs.vars, {"y12", "z11"})},
        {mono_of(gs.vars, {"y22", "z23"}), mono_of(gs.vars, {"y23", "z33"})},
        {mono_of(gs.vars, {"y33", "z23"}), mono_of(gs.vars, {"y23", "z22"})},
    };
    // the resolution the diagonal refinement y11 < y22 < y33, z11 < z22 < z33
    // naturally produces; it lands on the T10 triangulation
    gs.default_choices = {0, 1, 0, 1};
    return gs;
}

GeneratorSet build_g10() {
    GeneratorSet gs;
    gs.genus = 10;
    gs.delta_dim = 2;
    gs.ideal_degree = 18;
    for (const auto& nm : {"r", "u", "v", "w", "x00", "x01", "x10", "x11", "y00", "y01", "y10",
                           "y11", "z0", "z1"})
        gs.vars.add(nm);
    auto V = [&](const std::string& n) { return Polynomial::variable(gs.vars.id(n)); };
    auto N = [&](const std::string& n) { return Polynomial::constant(-1) * V(n); };
    // entries above the diagonal of the 7x7 antisymmetric matrix
    std::map<std::pair<int, int>, Polynomial> m;
    m[{1, 2}] = N("x10");
    m[{1, 3}] = V("x11");
    m[{1, 4}] = V("w");
    m[{1, 5}] = V("y11");
    m[{1, 6}] = V("y10");
    m[{1, 7}] = V("u");
    m[{2, 3}] = N("v");
    m[{2, 4}] = V("y00");
    m[{2, 5}] = V("r");
    m[{2, 6}] = V("z0");
    m[{2, 7}] = V("x00");
    m[{3, 4}] = V("y01");
    m[{3, 5}] = V("z1");
    m[{3, 6}] = N("w") - V("r");
    m[{3, 7}] = V("x01");
    m[{4, 5}] = V("x01");
    m[{4, 6}] = N("x00");
    m[{4, 7}] = V("v");
    m[{5, 6}] = V("u");
    m[{5, 7}] = V("x11");
    m[{6, 7}] = V("x10");
    auto entry = [&](int i, int j) { return m.at({i, j}); };
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = j + 1; k <= 7; ++k)
                for (int l = k + 1; l <= 7; ++l) gs.polys.push_back(pfaffian4(entry, i, j, k, l));

    std::vector<std::string> lo = {"u", "v"};
    std::vector<std::string> mid = {"r", "w", "x00", "x01", "x10", "x11"};
    std::vector<std::string> hi = {"y00", "y01", "y10", "y11", "z0", "z1"};
    add_group_chain(gs.vars, {lo, mid, hi}, gs.order_constraints);
    add_product_rule(gs.vars, lo, mid, hi, gs.order_constraints);
    add_signature_rules(gs.vars, lo, mid, hi, gs.order_constraints);

    gs.free_choices = {
        {mono_of(gs.vars, {"x00", "x11"}), mono_of(gs.vars, {"x01", "x10"})},
        {mono_of(gs.vars, {"x00", "y01"}), mono_of(gs.vars, {"x01", "y00"})},
        {mono_of(gs.vars, {"x10", "y11"}), mono_of(gs.vars, {"x11", "y10"})},
    };
    gs.default_choices = {0, 1, 0};  // lands on the T11 triangulation
    return gs;
}

/// Leading monomials with explicit tie reporting for the augmentation loop.
struct LeadOrTie {
    std::vector<Monomial> leads;
    bool tie = false;
    Monomial tie_a, tie_b;
};

LeadOrTie leads_or_tie(const std::vector<Polynomial>& gens, const TermOrder& order) {
    LeadOrTie r;
    for (const auto& g : gens) {
        const Monomial* best = nullptr;
        long long best_w = 0;
        for (const auto& [m, c] : g.terms) {
            long long w = order.weight(m);
            if (!best || w > best_w) {
                best = &m;
                best_w = w;
            } else if (w == best_w) {
                r.tie = true;
                r.tie_a = *best;
                r.tie_b = m;
                return r;
            }
        }
        r.leads.push_back(*best);
    }
    return r;
}

}  // namespace

GeneratorSet generator_set(int genus,
                           const std::optional<std::pair<std::string, std::string>>& quadric) {
    switch (genus) {
        case 6:
            return build_g6(quadric);
        case 7:
            if (quadric) throw Error("the quadric choice only applies to genus 6");
            return build_g7();
        case 8:
            if (quadric) throw Error("the quadric choice only applies to genus 6");
            return build_g8();
        case 9:
            if (quadric) throw Error("the quadric choice only applies to genus 6");
            return build_g9();
        case 10:
            if (quadric) throw Error("the quadric choice only applies to genus 6");
            return build_g10();
        default:
            throw Error("genus must be 6..10");
    }
}

SimplicialComplex expected_degeneration_complex(int genus) {
    static const std::map<int, int> delta = {{6, 2}, {7, 7}, {8, 5}, {9, 3}, {10, 2}};
    return join(deltahedron(genus + 1), SimplicialComplex::simplex(delta.at(genus), "q"));
}

SzCertificate sz_certify(const std::vector<Monomial>& monomials, const VarTable& vars,
                         const SimplicialComplex& expected, long long degree_bound) {
    SzCertificate cert;
    cert.degree_bound = degree_bound;
    std::set<Mask> supports;
    for (const auto& m : monomials) {
        if (!mono_squarefree(m)) throw Error("sz_certify: monomial not squarefree");
        Mask s = 0;
        for (auto [v, e] : m) s |= Mask(1) << v;
        supports.insert(s);
    }
    std::vector<Mask> edges(supports.begin(), supports.end());
    std::vector<Mask> trans = minimal_transversals(vars.size(), edges);
    cert.transversal_count = static_cast<long long>(trans.size());
    cert.expected_codim = vars.size() - 1 - expected.dim();
    bool uniform = true;
    for (Mask t : trans)
        if (popcount(t) != cert.expected_codim) uniform = false;
    if (uniform && !trans.empty()) cert.transversal_cardinality = cert.expected_codim;
    if (!uniform) {
        cert.reason = "mixed-cardinality";
        return cert;
    }
    if (cert.transversal_count > degree_bound) {
        cert.reason = "count>d";
        return cert;
    }
    SquarefreeMonomialIdeal ideal;
    ideal.variables = vars.names;
    ideal.generators = edges;
    SimplicialComplex k = complex_of_ideal(ideal);
    if (!isomorphic(k, expected)) {
        cert.reason = "wrong-complex";
        return cert;
    }
    cert.pass = true;
    return cert;
}

DegenCertificate certify_degeneration(
    int genus, const std::optional<std::vector<int>>& choices,
    const std::optional<std::pair<std::string, std::string>>& quadric) {
    GeneratorSet gs = generator_set(genus, quadric);
    std::vector<int> ch = choices.value_or(gs.default_choices);
    if (ch.size() != gs.free_choices.size()) throw Error("choice vector has the wrong length");
    auto constraints = gs.order_constraints;
    for (std::size_t i = 0; i < ch.size(); ++i) {
        auto [a, b] = gs.free_choices[i];
        if (ch[i])
            constraints.push_back({a, b});
        else
            constraints.push_back({b, a});
    }

    DegenCertificate cert;
    cert.genus = genus;
    for (int round = 0; round < 64; ++round) {
        cert.order = solve_order(gs.vars, constraints);
        LeadOrTie lt = leads_or_tie(gs.polys, cert.order);
        if (!lt.tie) {
            cert.initials = lt.leads;
            break;
        }
        // deterministic augmentation: the lexicographically larger monomial wins
        if (lt.tie_a < lt.tie_b) std::swap(lt.tie_a, lt.tie_b);
        constraints.push_back({lt.tie_a, lt.tie_b});
        cert.initials.clear();
    }
    if (cert.initials.empty()) throw TieDetected("tie augmentation did not converge");
    for (const auto& m : cert.initials)
        if (!mono_squarefree(m)) throw Error("initial monomial not squarefree");

    SimplicialComplex expected = expected_degeneration_complex(genus);
    cert.expected_name = "T" + std::to_string(genus + 1) + "*D" + std::to_string(gs.delta_dim);
    cert.sz = sz_certify(cert.initials, gs.vars, expected, gs.ideal_degree);
    cert.pass = cert.sz.pass && order_certified(cert.order);
    return cert;
}

std::vector<ChoiceOutcome> choice_enumeration(int genus) {
    if (genus != 9 && genus != 10) throw Error("choice_enumeration is for genus 9 or 10");
    GeneratorSet gs = generator_set(genus);
    SimplicialComplex target = deltahedron(genus + 1);
    int boxes = static_cast<int>(gs.free_choices.size());
    std::vector<ChoiceOutcome> out;
    for (int bits = 0; bits < (1 << boxes); ++bits) {
        std::vector<int> ch(boxes);
        for (int i = 0; i < boxes; ++i) ch[i] = (bits >> i) & 1;
        auto constraints = gs.order_constraints;
        for (int i = 0; i < boxes; ++i) {
            auto [a, b] = gs.free_choices[i];
            if (ch[i])
                constraints.push_back({a, b});
            else
                constraints.push_back({b, a});
        }
        TermOrder order = solve_order(gs.vars, constraints);
        LeadOrTie lt = leads_or_tie(gs.polys, order);
        for (int round = 0; lt.tie && round < 64; ++round) {
            if (lt.tie_a < lt.tie_b) std::swap(lt.tie_a, lt.tie_b);
            constraints.push_back({lt.tie_a, lt.tie_b});
            order = solve_order(gs.vars, constraints);
            lt = leads_or_tie(gs.polys, order);
        }
        if (lt.tie) throw TieDetected("tie augmentation did not converge");

        ChoiceOutcome oc;
        oc.choices = ch;
        oc.initials = lt.leads;
        SquarefreeMonomialIdeal ideal;
        ideal.variables = gs.vars.names;
        std::set<Mask> supports;
        for (const auto& mn : lt.leads) {
            Mask s = 0;
            for (auto [v, e] : mn) s |= Mask(1) << v;
            supports.insert(s);
        }
        ideal.generators.assign(supports.begin(), supports.end());
        SimplicialComplex k = complex_of_ideal(ideal);
        Mask support_union = 0;
        for (Mask s : ideal.generators) support_union |= s;
        SimplicialComplex sphere = k.restrict_to(
            [&] {
                Mask u = 0;
                for (const auto& nm : gs.vars.names) {
                    int idx = k.index_of(nm);
                    if (idx >= 0 && (support_union & (Mask(1) << gs.vars.id(nm))))
                        u |= Mask(1) << idx;
                }
                return u;
            }());
        oc.sphere_vertices = sphere.vertex_count();
        oc.sphere_ok = sphere.dim() == 2 && sphere.pure() && is_homology_sphere(sphere);
        oc.sphere_canonical = canonical_form(sphere);
        oc.iso_to_target = oc.sphere_ok && isomorphic(sphere, target);
        out.push_back(std::move(oc));
    }
    return out;
}

VersalFamily versal_a6_symbolic(int m) {
    if (m < -1) throw Error("versal_a6 needs m >= -1");
    VersalFamily fam;
    fam.m = m;
    auto& vars = fam.vars;
    auto dl = [&](int a, int b) { return diagonal_label(make_diagonal(6, a, b)); };
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 2; j <= 6; ++j) {
            if (i == 1 && j == 6) continue;
            fam.ring_var_ids.push_back(vars.add(dl(i, j)));
        }
    for (int k = 0; k <= m; ++k) fam.ring_var_ids.push_back(vars.add("y" + std::to_string(k)));
    auto cyc6 = [](int k) { return ((k - 1) % 6 + 6) % 6 + 1; };
    auto cyc3 = [](int k) { return ((k - 1) % 3 + 3) % 3 + 1; };
    for (int i = 1; i <= 6; ++i)
        for (int l = 1; l <= 3; ++l)
            fam.param_ids.push_back(vars.add("t" + std::to_string(i) + "_" + std::to_string(l)));
    for (int i = 1; i <= 6; ++i)
        for (int k = 0; k <= m; ++k)
            fam.param_ids.push_back(vars.add("r" + std::to_string(i) + "_" + std::to_string(k)));
    for (int i = 1; i <= 6; ++i) fam.param_ids.push_back(vars.add("u" + std::to_string(i)));
    for (int i = 1; i <= 3; ++i) fam.param_ids.push_back(vars.add("s" + std::to_string(i)));

    auto X = [&](int a, int b) {
        return Polynomial::variable(vars.id(dl(cyc6(a), cyc6(b))));
    };
    auto Yv = [&](int k) { return Polynomial::variable(vars.id("y" + std::to_string(k))); };
    auto T = [&](int i, int l) {
        return Polynomial::variable(vars.id("t" + std::to_string(cyc6(i)) + "_" + std::to_string(l)));
    };
    auto R = [&](int i, int k) {
        return Polynomial::variable(vars.id("r" + std::to_string(cyc6(i)) + "_" + std::to_string(k)));
    };
    auto U = [&](int i) { return Polynomial::variable(vars.id("u" + std::to_string(cyc6(i)))); };
    auto S = [&](int i) { return Polynomial::variable(vars.id("s" + std::to_string(cyc3(i)))); };
    // h indexed by the polygon edge (a, a+1)
    auto H = [&](int a) {
        Polynomial lin = T(a, 1) * X(a - 1, a + 2) + T(a, 2) * X(a - 1, a + 3) +
                         T(a, 3) * X(a - 2, a + 2);
        for (int k = 0; k <= m; ++k) lin += R(a, k) * Yv(k);
        return X(a - 1, a + 2) * lin;
    };
    auto neg = [](Polynomial p) { return Polynomial::constant(-1) * p; };

    // first family: perturbations of x_{i,i+2} x_{i+1,i-1}
    for (int i = 1; i <= 6; ++i) {
        std::vector<Polynomial> terms;
        terms.push_back(X(i, i + 2) * X(i + 1, i - 1));
        terms.push_back(H(i) * X(i + 2, i - 1));
        terms.push_back(S(i + 1) * H(i + 1) * H(i - 1));
        terms.push_back(neg(U(i) * H(i + 1) * X(i + 3, i - 1)));
        terms.push_back(neg(U(i + 1) * H(i - 1) * X(i + 2, i - 2)));
        terms.push_back(neg(U(i) * U(i + 1) * H(i - 2) * H(i + 2)));
        fam.equation_terms.push_back(std::move(terms));
    }
    // second family: perturbations of x_{i,i+3} x_{i+1,i-1}
    for (int i = 1; i <= 6; ++i) {
        std::vector<Polynomial> terms;
        terms.push_back(X(i, i + 3) * X(i + 1, i - 1));
        terms.push_back(neg(S(i) * H(i) * X(i + 3, i - 1)));
        terms.push_back(neg(S(i + 1) * X(i + 1, i + 3) * H(i - 1)));
        terms.push_back(U(i) * X(i + 1, i + 3) * X(i + 3, i - 1));
        terms.push_back(U(i + 3) * (U(i - 1) * H(i) * X(i, i + 2) + U(i + 1) * H(i - 1) * X(i, i - 2)));
        terms.push_back(neg(U(i + 1) * S(i) * H(i - 1) * H(i + 3)));
        terms.push_back(neg(U(i + 3) * S(i + 2) * H(i) * H(i - 1)));
        terms.push_back(neg(U(i - 1) * S(i + 1) * H(i) * H(i + 2)));
        terms.push_back(neg(U(i) * U(i + 1) * U(i - 1) * H(i + 2) * H(i + 3)));
        fam.equation_terms.push_back(std::move(terms));
    }
    // third family: perturbations of x_{i,i+3} x_{i+2,i-1}
    for (int i = 1; i <= 3; ++i) {
        std::vector<Polynomial> terms;
        terms.push_back(X(i, i + 3) * X(i + 2, i - 1));
        terms.push_back(S(i) * X(i, i + 2) * X(i + 3, i - 1));
        terms.push_back(neg(S(i + 1) * S(i + 2) * H(i - 1) * H(i + 2)));
        terms.push_back(neg(U(i) * U(i + 2) * X(i + 3, i - 1) * X(i + 3, i - 1)));
        terms.push_back(neg(U(i + 3) * U(i - 1) * X(i, i + 2) * X(i, i + 2)));
        terms.push_back(X(i + 3, i - 1) * (U(i) * S(i + 2) * H(i + 2) + U(i + 2) * S(i + 1) * H(i - 1)));
        terms.push_back(X(i, i + 2) * (U(i + 3) * S(i + 2) * H(i - 1) + U(i - 1) * S(i + 1) * H(i + 2)));
        terms.push_back(neg(S(i) * U(i + 1) * U(i - 2) * H(i + 2) * H(i - 1)));
        terms.push_back(neg(U(i + 1) * U(i - 2) *
                            (U(i + 3) * U(i + 2) * H(i - 1) * H(i - 1) +
                             U(i - 1) * U(i) * H(i + 2) * H(i + 2))));
        fam.equation_terms.push_back(std::move(terms));
    }
    return fam;
}

std::vector<Polynomial> versal_a6(int m, const VersalParams& params) {
    VersalFamily fam = versal_a6_symbolic(m);
    if (static_cast<int>(params.r.size()) != 6 && m >= 0)
        throw Error("versal_a6: params.r must have 6 rows");
    std::map<int, long long> values;
    for (int i = 1; i <= 6; ++i)
        for (int l = 1; l <= 3; ++l)
            values[fam.vars.id("t" + std::to_string(i) + "_" + std::to_string(l))] =
                params.t[i - 1][l - 1];
    for (int i = 1; i <= 6; ++i)
        for (int k = 0; k <= m; ++k)
            values[fam.vars.id("r" + std::to_string(i) + "_" + std::to_string(k))] =
                params.r.at(i - 1).at(k);
    for (int i = 1; i <= 6; ++i)
        values[fam.vars.id("u" + std::to_string(i))] = params.u[i - 1];
    for (int i = 1; i <= 3; ++i)
        values[fam.vars.id("s" + std::to_string(i))] = params.s[i - 1];
    std::vector<Polynomial> out;
    for (const auto& terms : fam.equation_terms) {
        Polynomial eq;
        for (const auto& t : terms) eq += t;
        out.push_back(substitute(eq, values));
    }
    return out;
}

}  // namespace srdef
