#include "srdef/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "complex_cache.hpp"

namespace srdef {

namespace {

constexpr int kMaxNodes = 128;

struct CGraph {
    int n = 0;
    std::vector<std::array<std::uint64_t, 2>> adj;
    // initial ordered partition: cells listed by ascending colour
    std::vector<std::vector<int>> init_cells;

    bool has_edge(int i, int j) const { return adj[i][j >> 6] >> (j & 63) & 1; }
    void add_edge(int i, int j) {
        adj[i][j >> 6] |= std::uint64_t(1) << (j & 63);
        adj[j][i >> 6] |= std::uint64_t(1) << (i & 63);
    }
};

using Partition = std::vector<std::vector<int>>;

int count_in(const CGraph& g, int v, const std::vector<int>& cell) {
    int c = 0;
    for (int u : cell) c += g.has_edge(v, u);
    return c;
}

/// Equitable refinement; stable under isomorphism by construction.
Partition refine(const CGraph& g, Partition part) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < part.size() && !changed; ++s) {
            const std::vector<int> splitter = part[s];
            Partition next;
            next.reserve(part.size());
            for (auto& cell : part) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<int, std::vector<int>> groups;
                for (int v : cell) groups[count_in(g, v, splitter)].push_back(v);
                if (groups.size() > 1) changed = true;
                for (auto& [cnt, vs] : groups) next.push_back(std::move(vs));
            }
            part = std::move(next);
        }
    }
    return part;
}

std::vector<std::uint64_t> encode(const CGraph& g, const std::vector<int>& order) {
    std::vector<std::uint64_t> enc((static_cast<std::size_t>(g.n) * (g.n - 1) / 2 + 63) / 64, 0);
    std::size_t bit = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++bit)
            if (g.has_edge(order[i], order[j])) enc[bit >> 6] |= std::uint64_t(1) << (bit & 63);
    return enc;
}

struct CanonResult {
    std::vector<int> order;  // position -> node
};

void search(const CGraph& g, Partition part, std::optional<std::vector<std::uint64_t>>& best,
            std::vector<int>& best_order,
            std::vector<std::vector<int>>* autos /* nullptr unless collecting */) {
    part = refine(g, part);
    int target = -1;
    for (std::size_t i = 0; i < part.size(); ++i)
        if (part[i].size() > 1) {
            target = static_cast<int>(i);
            break;
        }
    if (target < 0) {
        std::vector<int> order;
        order.reserve(g.n);
        for (auto& cell : part) order.push_back(cell[0]);
        auto enc = encode(g, order);
        if (!best || enc < *best) {
            best = enc;
            best_order = order;
        }
        if (autos && enc == *best) {
            // σ(v) = best_order[position of v in this leaf]
            std::vector<int> pos(g.n);
            for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
            std::vector<int> sigma(g.n);
            for (int v = 0; v < g.n; ++v) sigma[v] = best_order[pos[v]];
            autos->push_back(std::move(sigma));
        }
        return;
    }
    std::vector<int> cell = part[target];
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
        Partition child;
        child.reserve(part.size() + 1);
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (static_cast<int>(i) != target) {
                child.push_back(part[i]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int u : part[i])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
        }
        search(g, std::move(child), best, best_order, autos);
    }
}

std::vector<int> canonical_order(const CGraph& g) {
    std::optional<std::vector<std::uint64_t>> best;
    std::vector<int> best_order;
    search(g, g.init_cells, best, best_order, nullptr);
    return best_order;
}

std::vector<std::vector<int>> graph_automorphisms(const CGraph& g) {
    std::optional<std::vector<std::uint64_t>> best;
    std::vector<int> best_order;
    search(g, g.init_cells, best, best_order, nullptr);
    std::vector<std::vector<int>> autos;
    search(g, g.init_cells, best, best_order, &autos);
    std::sort(autos.begin(), autos.end());
    autos.erase(std::unique(autos.begin(), autos.end()), autos.end());
    return autos;
}

CGraph edge_graph_of(const SimplicialComplex& k) {
    CGraph g;
    g.n = k.vertex_count();
    g.adj.assign(g.n, {0, 0});
    for (auto [i, j] : k.edge_graph()) g.add_edge(i, j);
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    if (!all.empty()) g.init_cells.push_back(all);
    return g;
}

CGraph lattice_graph_of(const SimplicialComplex& k) {
    int n = k.vertex_count();
    int f = static_cast<int>(k.facets().size());
    CGraph g;
    g.n = n + f;
    if (g.n > kMaxNodes) throw SizeLimit("incidence graph too large for canonical labeling");
    g.adj.assign(g.n, {0, 0});
    for (int c = 0; c < f; ++c)
        for_bits(k.facets()[c], [&](int v) { g.add_edge(v, n + c); });
    std::vector<int> vs(n), fs(f);
    for (int i = 0; i < n; ++i) vs[i] = i;
    for (int i = 0; i < f; ++i) fs[i] = n + i;
    if (!vs.empty()) g.init_cells.push_back(vs);
    if (!fs.empty()) g.init_cells.push_back(fs);
    return g;
}

/// Canonical vertex sequence (canonical position -> vertex index).
std::vector<int> canonical_vertex_order(const SimplicialComplex& k) {
    if (k.vertex_count() == 0) return {};
    if (k.is_flag()) return canonical_order(edge_graph_of(k));
    auto order = canonical_order(lattice_graph_of(k));
    std::vector<int> vs;
    for (int node : order)
        if (node < k.vertex_count()) vs.push_back(node);
    return vs;
}

std::string serialize_canonical(const SimplicialComplex& k, const std::vector<int>& order) {
    std::vector<int> pos(k.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> facets;
    for (Mask f : k.facets()) {
        std::vector<int> fv;
        for_bits(f, [&](int v) { fv.push_back(pos[v]); });
        std::sort(fv.begin(), fv.end());
        facets.push_back(std::move(fv));
    }
    std::sort(facets.begin(), facets.end());
    std::string s = "v" + std::to_string(k.vertex_count()) + ":";
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i) s += ";";
        if (facets[i].empty()) s += "()";
        for (std::size_t j = 0; j < facets[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(facets[i][j]);
        }
    }
    return s;
}

}  // namespace

std::string canonical_form(const SimplicialComplex& k) {
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        if (k.cache()->canon_done) return k.cache()->canonical;
    }
    std::string s = serialize_canonical(k, canonical_vertex_order(k));
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        k.cache()->canonical = s;
        k.cache()->canon_done = true;
    }
    return s;
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.facets().size() != b.facets().size()) return false;
    if (!(a.f_vector() == b.f_vector())) return false;
    return canonical_form(a) == canonical_form(b);
}

const std::vector<std::vector<int>>& automorphisms(const SimplicialComplex& k) {
    {
        std::lock_guard<std::mutex> lk(k.cache()->mu);
        if (k.cache()->aut_done) return k.cache()->automorphisms;
    }
    std::vector<std::vector<int>> autos;
    if (k.vertex_count() == 0) {
        autos = {{}};
    } else if (k.is_flag()) {
        autos = graph_automorphisms(edge_graph_of(k));
    } else {
        auto latt = graph_automorphisms(lattice_graph_of(k));
        std::set<std::vector<int>> uniq;
        for (auto& sigma : latt)
            uniq.insert(std::vector<int>(sigma.begin(), sigma.begin() + k.vertex_count()));
        autos.assign(uniq.begin(), uniq.end());
    }
    std::lock_guard<std::mutex> lk(k.cache()->mu);
    k.cache()->automorphisms = std::move(autos);
    k.cache()->aut_done = true;
    return k.cache()->automorphisms;
}

std::vector<std::vector<int>> face_orbits(const SimplicialComplex& k,
                                          const std::vector<Mask>& faces) {
    const auto& autos = automorphisms(k);
    std::map<Mask, int> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);
    std::vector<int> parent(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& sigma : autos) {
        for (std::size_t i = 0; i < faces.size(); ++i) {
            Mask img = 0;
            for_bits(faces[i], [&](int v) { img |= Mask(1) << sigma[v]; });
            auto it = index.find(img);
            if (it == index.end()) continue;  // face list not closed under Aut
            int a = find(static_cast<int>(i)), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, std::vector<int>> orbits;
    for (std::size_t i = 0; i < faces.size(); ++i) orbits[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : orbits) out.push_back(std::move(members));
    return out;
}

std::string canonical_hash(const SimplicialComplex& k) {
    std::string s = canonical_form(k);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace srdef
