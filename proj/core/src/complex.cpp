#include "srdef/complex.hpp"

#include <algorithm>
#include <mutex>

#include "complex_cache.hpp"

namespace srdef {

namespace {

std::vector<Mask> reduce_to_maximal(std::vector<Mask> fs) {
    std::sort(fs.begin(), fs.end(),
              [](Mask a, Mask b) { return popcount(a) > popcount(b) || (popcount(a) == popcount(b) && a < b); });
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::vector<Mask> out;
    for (Mask f : fs) {
        bool contained = false;
        for (Mask g : out) {
            if (subset(f, g)) {
                contained = true;
                break;
            }
        }
        if (!contained) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : facets_{0} { init_cache(); }

void SimplicialComplex::init_cache() {
    cache_ = std::make_shared<detail::ComplexCache>();
    for (std::size_t i = 0; i < labels_.size(); ++i) cache_->label_index[labels_[i]] = static_cast<int>(i);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> idx;
    for (const auto& f : facets)
        for (const auto& v : f)
            if (!idx.count(v)) {
                idx[v] = static_cast<int>(labels.size());
                labels.push_back(v);
            }
    if (labels.size() > 64) throw SizeLimit("complexes are limited to 64 vertices");
    std::vector<Mask> ms;
    if (facets.empty()) ms.push_back(0);
    for (const auto& f : facets) {
        Mask m = 0;
        for (const auto& v : f) {
            Mask bit = Mask(1) << idx[v];
            if (m & bit) throw Error("repeated vertex in facet");
            m |= bit;
        }
        ms.push_back(m);
    }
    return from_facet_masks(std::move(labels), ms);
}

SimplicialComplex SimplicialComplex::from_facet_masks(std::vector<std::string> labels,
                                                      const std::vector<Mask>& facets) {
    if (labels.size() > 64) throw SizeLimit("complexes are limited to 64 vertices");
    std::vector<Mask> fs = facets;
    if (fs.empty()) fs.push_back(0);
    fs = reduce_to_maximal(std::move(fs));

    // compress away vertices that appear in no facet
    Mask used = 0;
    for (Mask f : fs) used |= f;
    SimplicialComplex k;
    if (used == 0) {
        k.labels_.clear();
        k.facets_ = fs;
        k.init_cache();
        return k;
    }
    std::vector<int> remap(labels.size(), -1);
    std::vector<std::string> new_labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (used & (Mask(1) << i)) {
            remap[i] = static_cast<int>(new_labels.size());
            new_labels.push_back(labels[i]);
        }
    }
    {
        std::set<std::string> uniq(new_labels.begin(), new_labels.end());
        if (uniq.size() != new_labels.size()) throw Error("duplicate vertex labels");
    }
    std::vector<Mask> new_fs;
    new_fs.reserve(fs.size());
    for (Mask f : fs) {
        Mask g = 0;
        for_bits(f, [&](int i) { g |= Mask(1) << remap[i]; });
        new_fs.push_back(g);
    }
    std::sort(new_fs.begin(), new_fs.end());
    k.labels_ = std::move(new_labels);
    k.facets_ = std::move(new_fs);
    k.init_cache();
    return k;
}

SimplicialComplex SimplicialComplex::simplex(int m, const std::string& prefix) {
    if (m < -1) throw Error("simplex dimension must be >= -1");
    std::vector<std::string> labels;
    Mask f = 0;
    for (int i = 0; i <= m; ++i) {
        labels.push_back(prefix + std::to_string(i));
        f |= Mask(1) << i;
    }
    return from_facet_masks(std::move(labels), {f});
}

SimplicialComplex SimplicialComplex::boundary_simplex(int m, const std::string& prefix) {
    if (m < 1) throw Error("boundary_simplex needs m >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i <= m; ++i) labels.push_back(prefix + std::to_string(i));
    Mask full = (m + 1 == 64) ? ~Mask(0) : ((Mask(1) << (m + 1)) - 1);
    std::vector<Mask> fs;
    for (int i = 0; i <= m; ++i) fs.push_back(full & ~(Mask(1) << i));
    return from_facet_masks(std::move(labels), fs);
}

SimplicialComplex SimplicialComplex::two_points(const std::string& a, const std::string& b) {
    return from_facets({{a}, {b}});
}

SimplicialComplex SimplicialComplex::cycle(int n, const std::string& prefix) {
    if (n < 3) throw Error("cycle needs n >= 3");
    std::vector<std::vector<std::string>> fs;
    for (int i = 0; i < n; ++i)
        fs.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % n)});
    return from_facets(fs);
}

Mask SimplicialComplex::full_mask() const {
    return labels_.empty() ? 0
                           : (labels_.size() == 64 ? ~Mask(0) : (Mask(1) << labels_.size()) - 1);
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

bool SimplicialComplex::pure() const {
    for (Mask f : facets_)
        if (popcount(f) != popcount(facets_[0])) return false;
    return true;
}

int SimplicialComplex::index_of(const std::string& label) const {
    auto it = cache_->label_index.find(label);
    return it == cache_->label_index.end() ? -1 : it->second;
}

Mask SimplicialComplex::face_mask(const std::vector<std::string>& vertex_labels) const {
    Mask m = 0;
    for (const auto& v : vertex_labels) {
        int i = index_of(v);
        if (i < 0) throw NotAFace("unknown vertex label '" + v + "'");
        m |= Mask(1) << i;
    }
    return m;
}

std::vector<std::string> SimplicialComplex::face_labels(Mask f) const {
    std::vector<std::string> out;
    for_bits(f, [&](int i) { out.push_back(labels_[i]); });
    return out;
}

bool SimplicialComplex::contains(Mask f) const {
    for (Mask g : facets_)
        if (subset(f, g)) return true;
    return false;
}

bool SimplicialComplex::same_faces(const SimplicialComplex& other) const {
    std::set<std::set<std::string>> a, b;
    for (Mask f : facets_) {
        auto ls = face_labels(f);
        a.insert(std::set<std::string>(ls.begin(), ls.end()));
    }
    for (Mask f : other.facets_) {
        auto ls = other.face_labels(f);
        b.insert(std::set<std::string>(ls.begin(), ls.end()));
    }
    return a == b;
}

const std::vector<Mask>& SimplicialComplex::faces_of_dim(int d) const {
    auto& c = *cache_;
    std::lock_guard<std::mutex> lk(c.mu);
    if (!c.faces_done) {
        long long budget = 0;
        for (Mask f : facets_) {
            budget += 1LL << popcount(f);
            if (budget > 8'000'000) throw SizeLimit("face enumeration too large");
        }
        c.faces_by_dim.assign(std::max(dim() + 1, 0), {});
        c.face_set.clear();
        c.face_set.insert(0);
        for (Mask f : facets_) {
            for (Mask s = f; s; s = (s - 1) & f)
                if (c.face_set.insert(s).second) c.faces_by_dim[popcount(s) - 1].push_back(s);
        }
        for (auto& v : c.faces_by_dim) std::sort(v.begin(), v.end());
        c.faces_done = true;
    }
    static const std::vector<Mask> kEmpty;
    if (d < 0 || d >= static_cast<int>(c.faces_by_dim.size())) return kEmpty;
    return c.faces_by_dim[d];
}

std::vector<Mask> SimplicialComplex::all_faces() const {
    std::vector<Mask> out;
    for (int d = 0; d <= dim(); ++d) {
        const auto& v = faces_of_dim(d);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

const std::unordered_set<Mask>& SimplicialComplex::face_set() const {
    faces_of_dim(0);
    return cache_->face_set;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    fv.counts.assign(dim() + 2, 0);
    fv.counts[0] = 1;
    for (int d = 0; d <= dim(); ++d) fv.counts[d + 1] = static_cast<long long>(faces_of_dim(d).size());
    return fv;
}

SimplicialComplex SimplicialComplex::link(Mask f) const {
    if (!contains(f)) throw NotAFace("link: not a face");
    std::vector<Mask> fs;
    for (Mask g : facets_)
        if (subset(f, g)) fs.push_back(g & ~f);
    if (fs.empty()) fs.push_back(0);
    return from_facet_masks(labels_, fs);
}

SimplicialComplex SimplicialComplex::closed_star(Mask f) const {
    if (!contains(f)) throw NotAFace("closed_star: not a face");
    std::vector<Mask> fs;
    for (Mask g : facets_)
        if (subset(f, g)) fs.push_back(g);
    if (fs.empty()) fs.push_back(0);
    return from_facet_masks(labels_, fs);
}

std::vector<Mask> SimplicialComplex::open_star(Mask f) const {
    if (!contains(f)) throw NotAFace("open_star: not a face");
    std::vector<Mask> out;
    for (Mask g : all_faces())
        if (subset(f, g)) out.push_back(g);
    if (f == 0) out.insert(out.begin(), 0);
    return out;
}

long long SimplicialComplex::valency(Mask f) const {
    return link(f).vertex_count();
}

SimplicialComplex SimplicialComplex::star_face(Mask f, const std::string& fresh_label) const {
    if (!contains(f)) throw NotAFace("star_face: not a face");
    if (popcount(f) < 2) throw Error("star_face: face must have dimension >= 1");
    if (index_of(fresh_label) >= 0) throw FreshLabelClash(fresh_label);
    if (labels_.size() + 1 > 64) throw SizeLimit("complexes are limited to 64 vertices");
    std::vector<std::string> labels = labels_;
    labels.push_back(fresh_label);
    Mask vbit = Mask(1) << labels_.size();
    std::vector<Mask> fs;
    for (Mask g : facets_) {
        if (!subset(f, g)) {
            fs.push_back(g);
            continue;
        }
        for_bits(f, [&](int w) { fs.push_back((g & ~(Mask(1) << w)) | vbit); });
    }
    return from_facet_masks(std::move(labels), fs);
}

SimplicialComplex SimplicialComplex::flip(Mask a, const std::vector<std::string>& b_labels) const {
    if (a == 0 || !contains(a)) throw NotAFace("flip: a is not a nonempty face");

    // extend labels by any fresh vertices of b
    std::vector<std::string> labels = labels_;
    std::vector<int> b_idx;
    for (const auto& lbl : b_labels) {
        int i = index_of(lbl);
        if (i < 0) {
            for (std::size_t j = 0; j < labels.size(); ++j)
                if (labels[j] == lbl) i = static_cast<int>(j);
        }
        if (i < 0) {
            i = static_cast<int>(labels.size());
            labels.push_back(lbl);
        }
        b_idx.push_back(i);
    }
    if (labels.size() > 64) throw SizeLimit("complexes are limited to 64 vertices");
    Mask b = 0;
    for (int i : b_idx) b |= Mask(1) << i;
    if (popcount(b) != static_cast<int>(b_labels.size())) throw Error("flip: repeated b label");
    if (b & a) throw NotExchangeable("flip: a and b overlap");

    SimplicialComplex lk = link(a);

    // b must not be a face of link(a); ∂b must be contained in link(a)
    Mask b_in_lk = 0;
    bool b_all_in_lk = true;
    for (int i : b_idx) {
        int j = lk.index_of(labels[i]);
        if (j < 0) {
            b_all_in_lk = false;
        } else {
            b_in_lk |= Mask(1) << j;
        }
    }
    if (b_all_in_lk && popcount(b) >= 1 && lk.contains(b_in_lk) && popcount(b_in_lk) == popcount(b))
        throw NotExchangeable("flip: b is a face of link(a)");
    if (popcount(b) >= 2) {
        if (!b_all_in_lk) throw NotExchangeable("flip: boundary of b not contained in link(a)");
        if (!boundary_in_complex(lk, b_in_lk))
            throw NotExchangeable("flip: boundary of b not contained in link(a)");
    }

    // L with link(a) = ∂b * L; for |b| = 1 this is link(a) itself
    SimplicialComplex big_l = (popcount(b) >= 2) ? l_b_complex(lk, b_in_lk) : lk;
    if (popcount(b) >= 2) {
        SimplicialComplex model = join(
            [&] {
                std::vector<std::string> bl;
                for (int i : b_idx) bl.push_back(labels[i]);
                std::vector<std::vector<std::string>> fs;
                for (std::size_t drop = 0; drop < bl.size(); ++drop) {
                    std::vector<std::string> f;
                    for (std::size_t j = 0; j < bl.size(); ++j)
                        if (j != drop) f.push_back(bl[j]);
                    fs.push_back(f);
                }
                return SimplicialComplex::from_facets(fs);
            }(),
            big_l);
        if (!model.same_faces(lk)) throw NotExchangeable("flip: link(a) does not factor as ∂b * L");
    }

    // new facet set: keep facets not containing a; add (a \ {w}) ∪ b ∪ l
    std::vector<Mask> fs;
    for (Mask g : facets_)
        if (!subset(a, g)) fs.push_back(g);
    std::vector<Mask> l_facets;
    for (Mask lf : big_l.facets()) {
        Mask m = 0;
        for_bits(lf, [&](int i) {
            int j = 0;
            // translate big_l index -> global label index
            const std::string& lbl = big_l.labels()[i];
            for (j = 0; j < static_cast<int>(labels.size()); ++j)
                if (labels[j] == lbl) break;
            m |= Mask(1) << j;
        });
        l_facets.push_back(m);
    }
    for_bits(a, [&](int w) {
        Mask base = (a & ~(Mask(1) << w)) | b;
        for (Mask lf : l_facets) fs.push_back(base | lf);
    });
    return from_facet_masks(std::move(labels), fs);
}

const std::vector<Mask>& SimplicialComplex::minimal_nonfaces() const {
    faces_of_dim(0);
    auto& c = *cache_;
    std::lock_guard<std::mutex> lk(c.mu);
    if (!c.mnf_done) {
        std::set<Mask> out;
        Mask full = full_mask();
        std::vector<Mask> faces;
        faces.push_back(0);
        for (const auto& v : c.faces_by_dim) faces.insert(faces.end(), v.begin(), v.end());
        for (Mask f : faces) {
            for_bits(full & ~f, [&](int v) {
                Mask m = f | (Mask(1) << v);
                if (c.face_set.count(m)) return;
                bool minimal = true;
                for_bits(m, [&](int w) {
                    if (!minimal) return;
                    if (!c.face_set.count(m & ~(Mask(1) << w))) minimal = false;
                });
                if (minimal) out.insert(m);
            });
        }
        c.minimal_nonfaces.assign(out.begin(), out.end());
        c.flag = true;
        for (Mask m : c.minimal_nonfaces)
            if (popcount(m) != 2) c.flag = false;
        c.mnf_done = true;
    }
    return c.minimal_nonfaces;
}

bool SimplicialComplex::is_flag() const {
    minimal_nonfaces();
    return cache_->flag;
}

std::vector<std::pair<int, int>> SimplicialComplex::edge_graph() const {
    std::vector<std::pair<int, int>> out;
    for (Mask e : faces_of_dim(1)) {
        int i = lowest_bit(e);
        int j = lowest_bit(e & (e - 1));
        out.emplace_back(i, j);
    }
    return out;
}

SimplicialComplex SimplicialComplex::clique_complex(const std::vector<std::string>& labels,
                                                    const std::vector<std::pair<int, int>>& edges,
                                                    int max_dim) {
    int n = static_cast<int>(labels.size());
    if (n > 64) throw SizeLimit("complexes are limited to 64 vertices");
    std::vector<Mask> adj(n, 0);
    for (auto [i, j] : edges) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw Error("bad edge");
        adj[i] |= Mask(1) << j;
        adj[j] |= Mask(1) << i;
    }
    // Bron–Kerbosch with pivoting
    std::vector<Mask> cliques;
    struct Frame {
        Mask r, p, x;
    };
    std::vector<Frame> stack;
    Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    stack.push_back({0, all, 0});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.p == 0 && fr.x == 0) {
            if (popcount(fr.r) > max_dim + 1)
                throw SizeLimit("clique exceeds configured max dimension");
            cliques.push_back(fr.r);
            continue;
        }
        // pivot: vertex of p|x with most neighbours in p
        int pivot = -1, best = -1;
        for_bits(fr.p | fr.x, [&](int u) {
            int c = popcount(adj[u] & fr.p);
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        Mask cand = fr.p & ~adj[pivot];
        Mask pp = fr.p, xx = fr.x;
        for_bits(cand, [&](int v) {
            stack.push_back({fr.r | (Mask(1) << v), pp & adj[v], xx & adj[v]});
            pp &= ~(Mask(1) << v);
            xx |= Mask(1) << v;
        });
    }
    if (cliques.empty()) cliques.push_back(0);
    return from_facet_masks(labels, cliques);
}

std::vector<SimplicialComplex> SimplicialComplex::flag_join_factors() const {
    if (!is_flag() || vertex_count() == 0) return {*this};
    int n = vertex_count();
    std::vector<Mask> non_adj(n, 0);
    for (Mask m : minimal_nonfaces()) {
        int i = lowest_bit(m);
        int j = lowest_bit(m & (m - 1));
        non_adj[i] |= Mask(1) << j;
        non_adj[j] |= Mask(1) << i;
    }
    // connected components of the complement graph
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> todo{i};
        comp[i] = nc;
        while (!todo.empty()) {
            int u = todo.back();
            todo.pop_back();
            for_bits(non_adj[u], [&](int v) {
                if (comp[v] < 0) {
                    comp[v] = nc;
                    todo.push_back(v);
                }
            });
        }
        ++nc;
    }
    if (nc <= 1) return {*this};
    std::vector<Mask> comp_mask(nc, 0);
    for (int i = 0; i < n; ++i) comp_mask[comp[i]] |= Mask(1) << i;
    std::vector<SimplicialComplex> out;
    for (int c = 0; c < nc; ++c) out.push_back(restrict_to(comp_mask[c]));
    return out;
}

SimplicialComplex SimplicialComplex::restrict_to(Mask vertex_subset) const {
    std::vector<Mask> fs;
    for (Mask g : facets_) fs.push_back(g & vertex_subset);
    return from_facet_masks(labels_, fs);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<std::string> b_labels;
    for (const auto& l : b.labels()) {
        std::string nl = l;
        while (used.count(nl)) nl = "r." + nl;
        used.insert(nl);
        b_labels.push_back(nl);
    }
    labels.insert(labels.end(), b_labels.begin(), b_labels.end());
    if (labels.size() > 64) throw SizeLimit("complexes are limited to 64 vertices");
    int shift = a.vertex_count();
    std::vector<Mask> fs;
    for (Mask fa : a.facets())
        for (Mask fb : b.facets()) fs.push_back(fa | (fb << shift));
    return SimplicialComplex::from_facet_masks(std::move(labels), fs);
}

bool boundary_in_complex(const SimplicialComplex& k, Mask b) {
    bool ok = true;
    for_bits(b, [&](int v) {
        if (!ok) return;
        if (!k.contains(b & ~(Mask(1) << v))) ok = false;
    });
    return ok;
}

SimplicialComplex l_b_complex(const SimplicialComplex& k, Mask b) {
    if (b == 0) throw Error("l_b: b must be nonempty");
    if (!k.contains(b) && !boundary_in_complex(k, b))
        throw Error("l_b: undefined, b is not a face and ∂b is not a subcomplex");
    // ∩ link(b') over proper subsets b' ⊂ b (with b' = ∅ contributing k itself).
    if (popcount(b) == 1) return k;
    // g ∈ L_b  ⇔  g ∩ b = ∅ and g ∪ b' ∈ K for every proper b' ⊂ b.
    // It suffices to verify the maximal proper subsets b \ {v}.
    std::vector<Mask> fs;
    for (Mask g : k.all_faces()) {
        if (g & b) continue;
        bool ok = true;
        for_bits(b, [&](int v) {
            if (!ok) return;
            if (!k.contains(g | (b & ~(Mask(1) << v)))) ok = false;
        });
        if (ok) fs.push_back(g);
    }
    fs.push_back(0);
    return SimplicialComplex::from_facet_masks(k.labels(), fs);
}

}  // namespace srdef
