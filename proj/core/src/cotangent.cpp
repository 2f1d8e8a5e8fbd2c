#include "srdef/cotangent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "posetpair.hpp"
#include "srdef/canonical.hpp"
#include "srdef/homology.hpp"
#include "srdef/numeric.hpp"
#include "srdef/parallel.hpp"

namespace srdef {

namespace {

Mask bit(int v) { return Mask(1) << v; }

bool in_u_set(const SimplicialComplex& k, Mask b, Mask f) {
    return !k.face_set().count(f | b);
}

bool in_ut_set(const SimplicialComplex& k, Mask b, Mask f) {
    bool in = false;
    for_bits(b, [&](int v) {
        if (in) return;
        if (!k.face_set().count((f | b) & ~bit(v))) in = true;
    });
    return in;
}

std::string complex_key(const SimplicialComplex& k) {
    std::string s;
    for (const auto& l : k.labels()) {
        s += l;
        s += ',';
    }
    s += '|';
    for (Mask f : k.facets()) {
        s += std::to_string(f);
        s += ';';
    }
    return s;
}

struct LocalPiece {
    Mask b;  // in the local complex's indexing
    long long dim;
};

struct LocalResult {
    std::vector<LocalPiece> pieces;   // vertex and minimal-non-face candidates (plus
                                      // face candidates when the complex is not flag)
    long long face_pairs_skipped = 0; // face candidates provably zero (flag case)
};

std::mutex g_memo_mu;
std::map<std::pair<std::string, int>, LocalResult> g_memo;

/// All degree -b pieces of T^order over a single join factor (a = ∅ case).
LocalResult local_pieces(const SimplicialComplex& f, int order) {
    std::string key = complex_key(f);
    {
        std::lock_guard<std::mutex> lk(g_memo_mu);
        auto it = g_memo.find({key, order});
        if (it != g_memo.end()) return it->second;
    }
    LocalResult res;
    for (int v = 0; v < f.vertex_count(); ++v) {
        res.pieces.push_back({bit(v), relative_pair_cohomology(f, bit(v), order)});
    }
    for (Mask m : f.minimal_nonfaces()) {
        res.pieces.push_back({m, relative_pair_cohomology(f, m, order)});
    }
    if (f.is_flag()) {
        for (int d = 1; d <= f.dim(); ++d)
            res.face_pairs_skipped += static_cast<long long>(f.faces_of_dim(d).size());
    } else {
        for (int d = 1; d <= f.dim(); ++d)
            for (Mask g : f.faces_of_dim(d))
                res.pieces.push_back({g, relative_pair_cohomology(f, g, order)});
    }
    {
        std::lock_guard<std::mutex> lk(g_memo_mu);
        g_memo[{key, order}] = res;
    }
    return res;
}

Mask translate(const SimplicialComplex& from, const SimplicialComplex& to, Mask m) {
    Mask out = 0;
    for_bits(m, [&](int v) {
        int j = to.index_of(from.labels()[v]);
        if (j < 0) throw Error("translate: label missing");
        out |= bit(j);
    });
    return out;
}

}  // namespace

USets u_sets(const SimplicialComplex& k, Mask b) {
    if (b == 0) throw Error("u_sets: b must be nonempty");
    USets u;
    u.b = b;
    u.empty_in_u = !k.contains(b);
    if (!u.empty_in_u) {
        for (Mask g : k.facets())
            if (subset(b, g)) u.complement_u_facets.push_back(g);
    }
    // complement of Ũ: faces with (f ∪ b) \ {v} ∈ K for every v in b
    std::vector<Mask> not_ut;
    for (Mask f : k.all_faces())
        if (!in_ut_set(k, b, f)) not_ut.push_back(f);
    // reduce to maximal
    std::sort(not_ut.begin(), not_ut.end(),
              [](Mask a, Mask c) { return popcount(a) > popcount(c); });
    for (Mask f : not_ut) {
        bool covered = false;
        for (Mask g : u.complement_ut_facets)
            if (subset(f, g)) {
                covered = true;
                break;
            }
        if (!covered) u.complement_ut_facets.push_back(f);
    }
    if (u.complement_ut_facets.empty() && boundary_in_complex(k, b))
        u.complement_ut_facets.push_back(0);
    std::sort(u.complement_ut_facets.begin(), u.complement_ut_facets.end());
    u.u_equals_ut = true;
    for (Mask f : k.all_faces())
        if (in_u_set(k, b, f) != in_ut_set(k, b, f)) {
            u.u_equals_ut = false;
            break;
        }
    if (in_u_set(k, b, 0) != in_ut_set(k, b, 0)) u.u_equals_ut = false;
    return u;
}

SimplicialComplex l_b(const SimplicialComplex& k, Mask b) { return l_b_complex(k, b); }

long long relative_pair_cohomology(const SimplicialComplex& k, Mask b, int i) {
    if (b == 0) throw Error("relative_pair_cohomology: b must be nonempty");
    if (i != 1 && i != 2) throw Error("relative_pair_cohomology: i must be 1 or 2");
    if (!subset(b, k.full_mask())) throw Error("relative_pair_cohomology: b outside vertex set");
    // U_b = Ũ_b unless ∂b is a subcomplex; identical pairs contribute nothing.
    if (!boundary_in_complex(k, b)) return 0;
    bool single = popcount(b) == 1;
    bool empty_in_u = !k.contains(b);
    auto in_u = [&](Mask f) { return in_u_set(k, b, f); };
    auto in_a = [&](Mask f) { return single ? false : in_ut_set(k, b, f); };
    PairHomology h = pair_model_homology(k, in_u, in_a, empty_in_u, single);
    return i == 1 ? h.h0 : h.h1;
}

long long t_piece(const SimplicialComplex& k, int i, Mask a, Mask b) {
    if (b == 0) throw InvalidSupportPair("b must be nonempty");
    if (a & b) throw InvalidSupportPair("a and b must have disjoint supports");
    if (!k.contains(a)) return 0;  // vanishing condition
    SimplicialComplex lk = k.link(a);
    // b ⊆ V(link(a))?
    Mask b_lk = 0;
    bool ok = true;
    for_bits(b, [&](int v) {
        int j = lk.index_of(k.labels()[v]);
        if (j < 0)
            ok = false;
        else
            b_lk |= bit(j);
    });
    if (!ok) return 0;  // vanishing condition
    return relative_pair_cohomology(lk, b_lk, i);
}

std::vector<CandidatePair> candidate_pairs(const SimplicialComplex& k) {
    std::vector<CandidatePair> out;
    std::vector<Mask> all_a;
    all_a.push_back(0);
    for (Mask f : k.all_faces()) all_a.push_back(f);
    for (Mask a : all_a) {
        SimplicialComplex lk = k.link(a);
        for (int v = 0; v < lk.vertex_count(); ++v)
            out.push_back({a, translate(lk, k, bit(v)), false});
        for (int d = 1; d <= lk.dim(); ++d)
            for (Mask g : lk.faces_of_dim(d)) out.push_back({a, translate(lk, k, g), true});
        for (Mask m : lk.minimal_nonfaces()) out.push_back({a, translate(lk, k, m), false});
    }
    return out;
}

CotangentCertificate cotangent_certificate(const SimplicialComplex& k, int order, int jobs) {
    CotangentCertificate cert;
    cert.order = order;
    cert.complex_hash = canonical_hash(k);

    // Collect (a, factor) tasks; factors of flag links split the work.
    struct Task {
        Mask a;
        SimplicialComplex factor;
    };
    std::vector<Task> tasks;
    std::vector<Mask> all_a;
    all_a.push_back(0);
    for (Mask f : k.all_faces()) all_a.push_back(f);
    for (Mask a : all_a) {
        SimplicialComplex lk = (a == 0) ? k : k.link(a);
        for (auto& f : lk.flag_join_factors()) tasks.push_back({a, f});
        if (lk.is_flag() && lk.vertex_count() > 0) {
            // faces of the link spanning several join factors are still faces
            // of a flag complex, hence zero; count them too
            long long total_faces = 0;
            for (int d = 1; d <= lk.dim(); ++d)
                total_faces += static_cast<long long>(lk.faces_of_dim(d).size());
            long long factor_faces = 0;
            for (auto& f : lk.flag_join_factors())
                for (int d = 1; d <= f.dim(); ++d)
                    factor_faces += static_cast<long long>(f.faces_of_dim(d).size());
            cert.face_pairs_skipped += total_faces - factor_faces;
        }
    }

    std::vector<LocalResult> results(tasks.size());
    parallel_for(tasks.size(), jobs,
                 [&](std::size_t i) { results[i] = local_pieces(tasks[i].factor, order); });

    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto& task = tasks[t];
        const auto& res = results[t];
        cert.face_pairs_skipped += res.face_pairs_skipped;
        for (const auto& p : res.pieces) {
            PieceEntry e;
            e.a = k.face_labels(task.a);
            e.b = task.factor.face_labels(p.b);
            e.dim = p.dim;
            cert.pieces.push_back(e);
            cert.total_dim += p.dim;
            if (p.dim != 0) cert.all_zero = false;
            int ca = popcount(task.a);
            int cb = popcount(p.b);
            if (p.dim != 0 && ca >= 1 && ca <= cb) {
                // #exponent vectors with support exactly a and total degree |b|
                cert.degree0_dim +=
                    p.dim * static_cast<long long>(binomial(cb - 1, ca - 1));
            }
        }
    }
    return cert;
}

CotangentCertificate t2_certificate(const SimplicialComplex& k, int jobs) {
    return cotangent_certificate(k, 2, jobs);
}

bool t2_is_zero(const SimplicialComplex& k, int jobs) {
    return t2_certificate(k, jobs).all_zero;
}

long long t1_degree_zero_dim(const SimplicialComplex& k, int jobs) {
    return cotangent_certificate(k, 1, jobs).degree0_dim;
}

long long t2_degree_zero_dim(const SimplicialComplex& k, int jobs) {
    return cotangent_certificate(k, 2, jobs).degree0_dim;
}

long long t2_via_h1_lb(const SimplicialComplex& k, Mask b) {
    if (popcount(b) != 2 || k.contains(b) || !boundary_in_complex(k, b))
        throw PreconditionUnverified("t2_via_h1_lb needs a non-edge b");
    if (k.dim() != 3 || !is_homology_sphere(k))
        throw PreconditionUnverified("t2_via_h1_lb needs a homology 3-sphere");
    SimplicialComplex lb = l_b_complex(k, b);
    BettiVector betti = reduced_betti(lb);
    return betti.size() > 1 ? betti[1] : 0;
}

bool t1_manifold_nonzero(const SimplicialComplex& k, Mask b) {
    if (k.contains(b) || !boundary_in_complex(k, b))
        throw PreconditionUnverified("t1_manifold_nonzero needs a non-face b with ∂b in K");
    if (!is_homology_sphere(k))
        throw PreconditionUnverified("t1_manifold_nonzero needs a closed-manifold proxy");
    SimplicialComplex lb = l_b_complex(k, b);
    std::vector<std::vector<std::string>> boundary_facets;
    auto bl = k.face_labels(b);
    for (std::size_t drop = 0; drop < bl.size(); ++drop) {
        std::vector<std::string> f;
        for (std::size_t j = 0; j < bl.size(); ++j)
            if (j != drop) f.push_back(bl[j]);
        boundary_facets.push_back(f);
    }
    SimplicialComplex model = join(SimplicialComplex::from_facets(boundary_facets), lb);
    return canonical_form(k) == canonical_form(model);
}

long long t2_flag_vertex_formula(const SimplicialComplex& k, int v) {
    Mask b = bit(v);
    auto in_u = [&](Mask f) { return in_u_set(k, b, f); };
    auto in_a = [&](Mask) { return false; };
    PairHomology h = pair_model_homology(k, in_u, in_a, false, true);
    return h.h1;
}

long long t2_flag_nonedge_formula(const SimplicialComplex& k, Mask b) {
    if (popcount(b) != 2 || k.contains(b)) throw Error("t2_flag_nonedge_formula needs a non-edge");
    // W = K \ (∂b * L_b); model is the order complex of W. Reduced H^0 counts
    // its comparability components minus one.
    SimplicialComplex sub = join(
        [&] {
            auto bl = k.face_labels(b);
            return SimplicialComplex::from_facets({{bl[0]}, {bl[1]}});
        }(),
        l_b_complex(k, b));
    std::unordered_set<Mask> sub_faces;
    sub_faces.insert(0);
    for (Mask f : sub.facets()) {
        Mask g = translate(sub, k, f);
        for (Mask s = g; s; s = (s - 1) & g) sub_faces.insert(s);
    }
    std::vector<Mask> w;
    for (Mask f : k.all_faces())
        if (!sub_faces.count(f)) w.push_back(f);
    if (w.empty()) return 0;
    // union-find on comparability
    std::map<Mask, int> idx;
    for (std::size_t i = 0; i < w.size(); ++i) idx[w[i]] = static_cast<int>(i);
    std::vector<int> parent(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask g : w) {
        for (Mask s = (g - 1) & g; s; s = (s - 1) & g) {
            auto it = idx.find(s);
            if (it != idx.end()) {
                int a = find(idx[g]), c = find(it->second);
                if (a != c) parent[std::max(a, c)] = std::min(a, c);
            }
        }
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < w.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<long long>(roots.size()) - 1;
}

}  // namespace srdef
