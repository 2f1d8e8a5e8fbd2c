#include "srdef/hypergraph.hpp"

#include <algorithm>

namespace srdef {

namespace {

void enumerate(const std::vector<Mask>& edges, Mask chosen, Mask excluded,
               std::vector<Mask>& out) {
    // first edge not hit by `chosen`
    Mask open = 0;
    for (Mask e : edges)
        if ((e & chosen) == 0) {
            open = e;
            break;
        }
    if (open == 0) {
        out.push_back(chosen);
        return;
    }
    Mask cands = open & ~excluded;
    Mask done = 0;
    for_bits(cands, [&](int v) {
        enumerate(edges, chosen | (Mask(1) << v), excluded | done, out);
        done |= Mask(1) << v;
    });
}

}  // namespace

std::vector<Mask> minimal_transversals(int n, const std::vector<Mask>& edges) {
    (void)n;
    for (Mask e : edges)
        if (e == 0) throw Error("minimal_transversals: empty edge");
    // only inclusion-minimal edges constrain the covers
    std::vector<Mask> es = edges;
    std::sort(es.begin(), es.end(), [](Mask a, Mask b) {
        return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
    });
    es.erase(std::unique(es.begin(), es.end()), es.end());
    std::vector<Mask> minimal_edges;
    for (Mask e : es) {
        bool redundant = false;
        for (Mask f : minimal_edges)
            if (subset(f, e)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal_edges.push_back(e);
    }

    std::vector<Mask> covers;
    enumerate(minimal_edges, 0, 0, covers);

    // keep inclusion-minimal covers only
    std::sort(covers.begin(), covers.end(), [](Mask a, Mask b) {
        return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
    });
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    std::vector<Mask> out;
    for (Mask c : covers) {
        bool contains_smaller = false;
        for (Mask s : out)
            if (subset(s, c)) {
                contains_smaller = true;
                break;
            }
        if (!contains_smaller) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace srdef
