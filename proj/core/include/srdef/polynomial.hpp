#pragma once

#include <map>
#include <string>
#include <vector>

#include "srdef/errors.hpp"

namespace srdef {

/// Interned variable names for one polynomial ring.
struct VarTable {
    std::vector<std::string> names;
    std::map<std::string, int> index;

    int add(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(name);
        index[name] = id;
        return id;
    }
    int id(const std::string& name) const {
        auto it = index.find(name);
        if (it == index.end()) throw Error("unknown variable " + name);
        return it->second;
    }
    int size() const { return static_cast<int>(names.size()); }
};

/// Exponent list sorted by variable id, exponents > 0.
using Monomial = std::vector<std::pair<int, int>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
int mono_total_degree(const Monomial& m);
bool mono_squarefree(const Monomial& m);
std::string mono_to_string(const Monomial& m, const VarTable& vars);

/// Integer-coefficient multivariate polynomial.
struct Polynomial {
    std::map<Monomial, long long> terms;  // no zero coefficients stored

    static Polynomial zero() { return {}; }
    static Polynomial constant(long long c);
    static Polynomial variable(int v);

    bool is_zero() const { return terms.empty(); }
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(long long c, Polynomial a);
    bool operator==(const Polynomial&) const = default;
};

/// Substitute integer values for a subset of variables (by id); the result is
/// a polynomial in the remaining variables.
Polynomial substitute(const Polynomial& p, const std::map<int, long long>& values);

/// 4x4 Pfaffian m01*m23 - m02*m13 + m03*m12 of an antisymmetric matrix given
/// by the entries above the diagonal of the selected rows {i<j<k<l}.
/// `entry(i, j)` must return the (i, j) entry for i < j as a polynomial.
template <typename EntryFn>
Polynomial pfaffian4(EntryFn entry, int i, int j, int k, int l) {
    return entry(i, j) * entry(k, l) - entry(i, k) * entry(j, l) + entry(i, l) * entry(j, k);
}

/// A term order realized as an integer weight vector plus a graded-reverse-lex
/// tiebreak over a declared variable order; the declared constraints hold
/// strictly under the weights alone.
struct TermOrder {
    std::vector<long long> weights;                        // per variable id
    std::vector<int> grevlex_order;                        // variable ids, most significant first
    std::vector<std::pair<Monomial, Monomial>> constraints;  // m1 > m2, all strict

    long long weight(const Monomial& m) const {
        long long w = 0;
        for (auto [v, e] : m) w += weights[v] * e;
        return w;
    }
};

/// Find integer weights making every constraint m1 > m2 strict.
/// Throws Infeasible if no weight vector exists.
TermOrder solve_order(const VarTable& vars,
                      const std::vector<std::pair<Monomial, Monomial>>& constraints);

/// Re-check every declared constraint strictly; the feasibility certificate.
bool order_certified(const TermOrder& order);

/// Leading monomial of each generator under the weights. Throws TieDetected
/// (message names the two tied monomials) if some generator's maximum weight
/// is achieved twice.
std::vector<Monomial> initial_monomials(const std::vector<Polynomial>& gens,
                                        const TermOrder& order, const VarTable& vars);

}  // namespace srdef
