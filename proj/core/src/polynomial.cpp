#include "srdef/polynomial.hpp"

#include <algorithm>

namespace srdef {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.push_back({a[i].first, a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    return r;
}

int mono_total_degree(const Monomial& m) {
    int d = 0;
    for (auto [v, e] : m) d += e;
    return d;
}

bool mono_squarefree(const Monomial& m) {
    for (auto [v, e] : m)
        if (e > 1) return false;
    return true;
}

std::string mono_to_string(const Monomial& m, const VarTable& vars) {
    if (m.empty()) return "1";
    std::string s;
    for (auto [v, e] : m) {
        if (!s.empty()) s += "*";
        s += vars.names[v];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

Polynomial Polynomial::constant(long long c) {
    Polynomial p;
    if (c != 0) p.terms[{}] = c;
    return p;
}

Polynomial Polynomial::variable(int v) {
    Polynomial p;
    p.terms[{{v, 1}}] = 1;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms[m] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = mono_mul(ma, mb);
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                r.terms[m] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

Polynomial operator*(long long c, Polynomial a) {
    if (c == 0) return {};
    for (auto& [m, v] : a.terms) v *= c;
    return a;
}

Polynomial substitute(const Polynomial& p, const std::map<int, long long>& values) {
    Polynomial r;
    for (const auto& [m, c] : p.terms) {
        long long coeff = c;
        Monomial rest;
        for (auto [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) {
                rest.push_back({v, e});
            } else {
                for (int k = 0; k < e; ++k) coeff *= it->second;
            }
        }
        if (coeff == 0) continue;
        auto it = r.terms.find(rest);
        if (it == r.terms.end()) {
            r.terms[rest] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

bool order_certified(const TermOrder& order) {
    for (const auto& [m1, m2] : order.constraints)
        if (order.weight(m1) <= order.weight(m2)) return false;
    return true;
}

std::vector<Monomial> initial_monomials(const std::vector<Polynomial>& gens,
                                        const TermOrder& order, const VarTable& vars) {
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        if (g.is_zero()) throw Error("initial_monomials: zero generator");
        const Monomial* best = nullptr;
        long long best_w = 0;
        bool tie = false;
        const Monomial* tied = nullptr;
        for (const auto& [m, c] : g.terms) {
            long long w = order.weight(m);
            if (!best || w > best_w) {
                best = &m;
                best_w = w;
                tie = false;
            } else if (w == best_w) {
                tie = true;
                tied = &m;
            }
        }
        if (tie)
            throw TieDetected(mono_to_string(*best, vars) + " vs " + mono_to_string(*tied, vars));
        out.push_back(*best);
    }
    return out;
}

}  // namespace srdef
