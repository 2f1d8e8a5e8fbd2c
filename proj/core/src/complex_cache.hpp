#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "srdef/complex.hpp"

namespace srdef::detail {

struct ComplexCache {
    std::mutex mu;
    std::unordered_map<std::string, int> label_index;

    bool faces_done = false;
    std::vector<std::vector<Mask>> faces_by_dim;
    std::unordered_set<Mask> face_set;

    bool mnf_done = false;
    std::vector<Mask> minimal_nonfaces;
    bool flag = false;

    bool canon_done = false;
    std::string canonical;

    bool homsph_done = false;
    bool homsph = false;

    bool betti_done = false;
    std::vector<long long> betti;

    bool aut_done = false;
    std::vector<std::vector<int>> automorphisms;
};

}  // namespace srdef::detail
