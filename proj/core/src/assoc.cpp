#include "srdef/assoc.hpp"

#include <algorithm>
#include <set>

#include "srdef/canonical.hpp"

namespace srdef {

namespace {

int cyc(int n, int k) { return ((k - 1) % n + n) % n + 1; }

std::vector<Diagonal> all_diagonals(int n) {
    std::vector<Diagonal> ds;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (i == 1 && j == n) continue;
            ds.push_back({i, j});
        }
    return ds;
}

/// Sub-associahedron of the polygon given by a cyclically ordered vertex list,
/// as a complex on the matching diagonals of the ambient n-gon.
SimplicialComplex sub_assoc(int n, const std::vector<int>& poly) {
    int s = static_cast<int>(poly.size());
    std::vector<Diagonal> ds;
    for (int a = 0; a < s; ++a)
        for (int b = a + 2; b < s; ++b) {
            if (a == 0 && b == s - 1) continue;
            ds.push_back(make_diagonal(n, poly[a], poly[b]));
        }
    if (ds.empty()) return SimplicialComplex();
    std::vector<std::string> labels;
    for (const auto& d : ds) labels.push_back(diagonal_label(d));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < ds.size(); ++a)
        for (std::size_t b = a + 1; b < ds.size(); ++b)
            if (!crossing(ds[a], ds[b])) edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    return SimplicialComplex::clique_complex(labels, edges);
}

}  // namespace

Diagonal make_diagonal(int n, int a, int b) {
    a = cyc(n, a);
    b = cyc(n, b);
    if (a > b) std::swap(a, b);
    if (a == b || b - a < 2 || (a == 1 && b == n))
        throw Error("not a diagonal: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return {a, b};
}

bool crossing(const Diagonal& a, const Diagonal& b) {
    if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
    auto inside = [&](int p) { return a.i < p && p < a.j; };
    return inside(b.i) != inside(b.j);
}

std::string diagonal_label(const Diagonal& d) {
    return "d" + std::to_string(d.i) + "_" + std::to_string(d.j);
}

AssocComplex assoc_build(int n) {
    if (n < 3) throw Error("assoc_build needs n >= 3");
    AssocComplex a;
    a.n = n;
    if (n == 3) {
        a.complex = SimplicialComplex();
        return a;
    }
    auto ds = all_diagonals(n);
    std::vector<std::string> labels;
    for (const auto& d : ds) labels.push_back(diagonal_label(d));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (!crossing(ds[i], ds[j])) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    a.complex = SimplicialComplex::clique_complex(labels, edges);
    return a;
}

std::vector<int> link_decomposition(int n, const std::vector<Diagonal>& face) {
    AssocComplex amb = assoc_build(n);
    std::vector<std::string> face_labels;
    for (const auto& d : face) face_labels.push_back(diagonal_label(d));
    Mask f = amb.complex.face_mask(face_labels);
    if (!amb.complex.contains(f)) throw NotAFace("link_decomposition: diagonals cross");

    // recursively split the polygon along the diagonals of the face
    std::vector<int> sizes;
    std::vector<std::pair<std::vector<int>, std::vector<Diagonal>>> stack;
    std::vector<int> whole(n);
    for (int i = 0; i < n; ++i) whole[i] = i + 1;
    stack.push_back({whole, face});
    while (!stack.empty()) {
        auto [poly, diags] = stack.back();
        stack.pop_back();
        if (diags.empty()) {
            sizes.push_back(static_cast<int>(poly.size()));
            continue;
        }
        Diagonal d = diags.back();
        diags.pop_back();
        auto pos = [&](int v) {
            return static_cast<int>(std::find(poly.begin(), poly.end(), v) - poly.begin());
        };
        int pi = pos(d.i), pj = pos(d.j);
        if (pi > pj) std::swap(pi, pj);
        std::vector<int> left(poly.begin() + pi, poly.begin() + pj + 1);
        std::vector<int> right(poly.begin() + pj, poly.end());
        right.insert(right.end(), poly.begin(), poly.begin() + pi + 1);
        std::vector<Diagonal> dl, dr;
        for (const auto& e : diags) {
            bool ei = std::find(left.begin(), left.end(), e.i) != left.end();
            bool ej = std::find(left.begin(), left.end(), e.j) != left.end();
            // a diagonal sharing an endpoint with d can sit in either list;
            // resolve by the strictly interior endpoint
            bool to_left;
            if (ei && ej) {
                bool strict_i = e.i != d.i && e.i != d.j;
                bool strict_j = e.j != d.i && e.j != d.j;
                if (strict_i || strict_j) {
                    int w = strict_i ? e.i : e.j;
                    to_left = std::find(left.begin() + 1, left.end() - 1, w) != left.end() - 1;
                } else {
                    to_left = true;  // cannot happen: e would equal d
                }
            } else {
                to_left = ei && ej;
            }
            (to_left ? dl : dr).push_back(e);
        }
        stack.push_back({left, dl});
        stack.push_back({right, dr});
    }
    std::sort(sizes.begin(), sizes.end());

    // verify the link against the join of the smaller complexes
    SimplicialComplex lk = amb.complex.link(f);
    SimplicialComplex model;
    bool first = true;
    int tag = 0;
    for (int s : sizes) {
        AssocComplex part = assoc_build(s);
        // relabel with a namespace tag to keep the join disjoint
        std::vector<std::vector<std::string>> facets;
        for (Mask fm : part.complex.facets()) {
            std::vector<std::string> fl;
            for (const auto& l : part.complex.face_labels(fm)) fl.push_back("p" + std::to_string(tag) + "." + l);
            facets.push_back(fl);
        }
        SimplicialComplex pc =
            facets.empty() ? SimplicialComplex() : SimplicialComplex::from_facets(facets);
        model = first ? pc : join(model, pc);
        first = false;
        ++tag;
    }
    if (!isomorphic(lk, model)) throw Error("link_decomposition: link does not match the join");
    return sizes;
}

SimplicialComplex l_b_structure(int n, const Diagonal& d1, const Diagonal& d2) {
    if (!crossing(d1, d2)) throw NotCrossing("l_b_structure needs a crossing pair");
    int i = std::min(d1.i, d2.i);
    int j = std::max(d1.i, d2.i);
    int k = std::min(d1.j, d2.j);
    int l = std::max(d1.j, d2.j);
    if (!(i < j && j < k && k < l)) throw NotCrossing("unexpected crossing configuration");

    auto segment = [&](int a, int b) {  // polygon from vertex a to vertex b cyclically
        std::vector<int> poly;
        int v = a;
        poly.push_back(v);
        while (v != b) {
            v = cyc(n, v + 1);
            poly.push_back(v);
        }
        return poly;
    };
    auto ball = [&](int a, int b) -> SimplicialComplex {
        if (cyc(n, a + 1) == b) return SimplicialComplex();  // adjacent: empty complex
        SimplicialComplex cone_pt = SimplicialComplex::from_facets({{diagonal_label(make_diagonal(n, a, b))}});
        return join(cone_pt, sub_assoc(n, segment(a, b)));
    };
    SimplicialComplex out = ball(i, j);
    out = join(out, ball(j, k));
    out = join(out, ball(k, l));
    out = join(out, ball(l, i));
    if (out.dim() != n - 5) throw Error("l_b_structure: unexpected dimension");
    return out;
}

T1Basis t1_basis(int n, int m) {
    if (n < 5) throw Error("t1_basis needs n >= 5");
    T1Basis basis;
    auto xd = [&](int a, int b) { return diagonal_label(make_diagonal(n, a, b)); };

    // family 1: vertex supports x_ij^2 and edge supports x_ij x_kl with
    // δ_kl outside the quadrangle cut off by δ_{i,i+3}
    for (int i = 1; i <= n; ++i) {
        int j = i + 3;
        std::vector<std::string> denom = {xd(i + 1, j), xd(i, j - 1)};
        basis.sets[0].push_back({{xd(i, j), xd(i, j)}, denom});
        // diagonals of the polygon (j, j+1, ..., i)
        std::vector<int> outer;
        int v = cyc(n, j);
        outer.push_back(v);
        while (v != cyc(n, i)) {
            v = cyc(n, v + 1);
            outer.push_back(v);
        }
        int s = static_cast<int>(outer.size());
        for (int a = 0; a < s; ++a)
            for (int b = a + 2; b < s; ++b) {
                if (a == 0 && b == s - 1) continue;
                std::vector<std::string> num = {xd(i, j),
                                                diagonal_label(make_diagonal(n, outer[a], outer[b]))};
                std::sort(num.begin(), num.end());
                basis.sets[0].push_back({num, denom});
            }
        for (int k = 0; k <= m; ++k)
            basis.sets[1].push_back({{xd(i, j), "y" + std::to_string(k)}, denom});
    }
    // family 3: a = {δ_{i,j-1}, δ_{i,j+1}} around the quadrangle (i, j-1, j, j+1)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 3; j <= i + n - 3; ++j) {
            std::vector<std::string> num = {xd(i, j - 1), xd(i, j + 1)};
            std::vector<std::string> den = {xd(i, j), xd(j - 1, j + 1)};
            std::sort(num.begin(), num.end());
            std::sort(den.begin(), den.end());
            basis.sets[2].push_back({num, den});
        }
    // family 4: a = {δ_ij, δ_{i+1,j-1}}, opposite sides of (i, i+1, j-1, j);
    // the (i, j) and (j-1, i+1) descriptions coincide, so dedupe
    std::set<T1BasisElement> seen;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 4; j <= i + n - 2; ++j) {
            std::vector<std::string> num = {xd(i, j), xd(i + 1, j - 1)};
            std::vector<std::string> den = {xd(i + 1, j), xd(i, j - 1)};
            std::sort(num.begin(), num.end());
            std::sort(den.begin(), den.end());
            T1BasisElement e{num, den};
            if (seen.insert(e).second) basis.sets[3].push_back(e);
        }
    return basis;
}

UnstarPlan default_unstar_plan(int n, int r) {
    if (!(n > r && r >= 4)) throw Error("unstar plan needs n > r >= 4");
    UnstarPlan plan;
    plan.n = n;
    plan.r = r;
    // descending in the order (i,j) <= (k,l) iff j < l, or j = l and i >= k
    for (int j = n; j >= r + 1; --j)
        for (int i = 3; i <= r - 1; ++i) plan.order.push_back({i, j});
    return plan;
}

std::vector<SimplicialComplex> unstar_sequence(const UnstarPlan& plan) {
    AssocComplex a = assoc_build(plan.n);
    std::vector<SimplicialComplex> seq;
    seq.push_back(a.complex);
    SimplicialComplex k = a.complex;
    for (const auto& d : plan.order) {
        Mask v = k.face_mask({diagonal_label(d)});
        std::vector<std::string> b = {diagonal_label(make_diagonal(plan.n, 1, d.i)),
                                      diagonal_label(make_diagonal(plan.n, 2, d.j))};
        try {
            k = k.flip(v, b);
        } catch (const NotExchangeable& e) {
            throw UnstarBlocked("unstarring " + diagonal_label(d) + ": " + e.what());
        }
        seq.push_back(k);
    }
    int s = plan.n + 3 - plan.r;
    SimplicialComplex model = join(assoc_build(plan.r).complex, assoc_build(s).complex);
    if (!isomorphic(seq.back(), model))
        throw Error("unstar_sequence: terminal complex is not the expected join");
    return seq;
}

std::vector<SimplicialComplex> hyperoct_chain(const std::vector<int>& rs) {
    int m = static_cast<int>(rs.size());
    if (m < 1) throw InvalidPartition("empty partition");
    long long total = 0;
    for (int r : rs) total += r;
    long long n = total - 3LL * (m - 1);
    for (int r : rs)
        if (!(r >= 4 && n > r)) throw InvalidPartition("need n > r_i >= 4");
    if (n < 4) throw InvalidPartition("partition does not describe a polygon");

    SimplicialComplex k = assoc_build(static_cast<int>(n)).complex;
    std::vector<SimplicialComplex> seq;
    seq.push_back(k);
    std::vector<int> poly(static_cast<int>(n));
    for (int i = 0; i < n; ++i) poly[i] = i + 1;
    for (int stage = 0; stage + 1 < m; ++stage) {
        int r = rs[stage];
        int sz = static_cast<int>(poly.size());
        // unstar D positions {3..r-1} x {r+1..sz} of the current polygon
        for (int j = sz; j >= r + 1; --j)
            for (int i = 3; i <= r - 1; ++i) {
                auto lbl = [&](int a, int b) {
                    return diagonal_label(make_diagonal(static_cast<int>(n), poly[a - 1], poly[b - 1]));
                };
                Mask v = k.face_mask({lbl(i, j)});
                try {
                    k = k.flip(v, {lbl(1, i), lbl(2, j)});
                } catch (const NotExchangeable& e) {
                    throw UnstarBlocked(std::string("hyperoct_chain: ") + e.what());
                }
                seq.push_back(k);
            }
        // remaining polygon: first two vertices plus positions r..sz
        std::vector<int> next = {poly[0], poly[1]};
        for (int p = r; p <= sz; ++p) next.push_back(poly[p - 1]);
        poly = std::move(next);
    }
    SimplicialComplex model;
    for (int idx = 0; idx < m; ++idx) {
        SimplicialComplex part = assoc_build(rs[idx]).complex;
        model = idx == 0 ? part : join(model, part);
    }
    if (!isomorphic(seq.back(), model))
        throw Error("hyperoct_chain: terminal complex is not the expected join");
    return seq;
}

std::vector<SimplicialComplex> c_n_series(int n) {
    if (n < 6) throw Error("c_n_series needs n >= 6");
    SimplicialComplex k = assoc_build(n).complex;
    std::vector<SimplicialComplex> seq;
    for (int step = 4; step <= n - 2; ++step) {
        std::vector<std::string> edge = {diagonal_label(make_diagonal(n, 1, 3)),
                                         diagonal_label(make_diagonal(n, step, n))};
        Mask e;
        try {
            e = k.face_mask(edge);
        } catch (const NotAFace&) {
            throw EdgeMissing(edge[0] + "," + edge[1]);
        }
        if (!k.contains(e) || popcount(e) != 2) throw EdgeMissing(edge[0] + "," + edge[1]);
        k = k.star_face(e, "eps" + std::to_string(step));
        seq.push_back(k);
    }
    return seq;
}

}  // namespace srdef
