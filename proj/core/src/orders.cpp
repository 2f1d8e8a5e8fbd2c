#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "srdef/numeric.hpp"
#include "srdef/polynomial.hpp"

namespace srdef {

namespace {

/// Phase-1 simplex over exact rationals: find x >= 0 with Ax = b (b >= 0),
/// minimizing the sum of artificial variables. Bland's rule throughout.
/// Returns true and the solution of the original n columns if the artificial
/// optimum is zero.
bool phase1_feasible(const std::vector<std::vector<Rational>>& a, std::vector<Rational>& x) {
    int m = static_cast<int>(a.size());
    if (m == 0) {
        x.clear();
        return true;
    }
    int n = static_cast<int>(a[0].size()) - 1;  // last column is b
    int total = n + m;
    // tableau rows: [A | I | b]
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(total + 1, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = a[i][n];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;
    // reduced cost row for minimizing sum of artificials
    std::vector<Rational> cost(total + 1, 0);
    for (int j = 0; j <= total; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += t[i][j];
        Rational c = (j >= n && j < total) ? 1 : 0;
        cost[j] = c - s;
    }
    while (true) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][total] / t[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return false;  // unbounded phase-1: cannot happen
        // pivot on (leave, enter)
        Rational p = t[leave][enter];
        for (int j = 0; j <= total; ++j) t[leave][j] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            Rational f = cost[enter];
            if (f != 0)
                for (int j = 0; j <= total; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // objective value = -cost[total]
    if (cost[total] != 0) return false;
    x.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][total];
    return true;
}

std::vector<long long> constraint_row(int n, const std::pair<Monomial, Monomial>& c) {
    std::vector<long long> d(n, 0);
    for (auto [v, e] : c.first) d[v] += e;
    for (auto [v, e] : c.second) d[v] -= e;
    return d;
}

}  // namespace

TermOrder solve_order(const VarTable& vars,
                      const std::vector<std::pair<Monomial, Monomial>>& constraints) {
    int n = vars.size();
    // deduplicate difference rows
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> rows;
    for (const auto& c : constraints) {
        auto d = constraint_row(n, c);
        bool all_zero = std::all_of(d.begin(), d.end(), [](long long v) { return v == 0; });
        if (all_zero) throw Infeasible("constraint compares a monomial with itself");
        if (seen.insert(d).second) rows.push_back(d);
    }

    std::vector<long long> w(n, 0);
    auto violated = [&](const std::vector<long long>& d) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += d[j] * w[j];
        return s < 1;
    };

    // Fast path: integer relaxation (perceptron updates). Strictly feasible
    // systems converge; fall back to the exact LP if this stalls.
    {
        long long updates = 0;
        bool clean = false;
        while (!clean && updates < 4'000'000) {
            clean = true;
            for (const auto& d : rows) {
                if (!violated(d)) continue;
                clean = false;
                for (int j = 0; j < n; ++j) w[j] += d[j];
                ++updates;
            }
        }
        if (clean) {
            TermOrder order;
            order.weights = w;
            order.constraints = constraints;
            order.grevlex_order.resize(n);
            std::iota(order.grevlex_order.begin(), order.grevlex_order.end(), 0);
            if (order_certified(order)) return order;
        }
        std::fill(w.begin(), w.end(), 0);
    }

    std::vector<std::vector<long long>> active;
    std::set<std::vector<long long>> active_set;
    for (int round = 0; round < 1000; ++round) {
        std::vector<const std::vector<long long>*> bad;
        for (const auto& d : rows)
            if (violated(d)) bad.push_back(&d);
        if (bad.empty()) {
            TermOrder order;
            order.weights = w;
            order.constraints = constraints;
            order.grevlex_order.resize(n);
            std::iota(order.grevlex_order.begin(), order.grevlex_order.end(), 0);
            if (!order_certified(order)) throw Infeasible("solved weights failed re-check");
            return order;
        }
        int added = 0;
        for (const auto* d : bad) {
            if (added >= 32) break;
            if (active_set.insert(*d).second) {
                active.push_back(*d);
                ++added;
            }
        }
        // LP: find rational w with (active) · w >= 1, via w = u - v, slack s:
        // rows: Au - Av - s = 1
        int m = static_cast<int>(active.size());
        std::vector<std::vector<Rational>> lp(m, std::vector<Rational>(2 * n + m + 1, 0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                lp[i][j] = Rational(active[i][j]);
                lp[i][n + j] = Rational(-active[i][j]);
            }
            lp[i][2 * n + i] = -1;
            lp[i][2 * n + m] = 1;
        }
        std::vector<Rational> x;
        if (!phase1_feasible(lp, x)) throw Infeasible("no weight vector satisfies the constraints");
        // scale to integers
        Int denom_lcm = 1;
        std::vector<Rational> wr(n);
        for (int j = 0; j < n; ++j) {
            wr[j] = x[j] - x[n + j];
            Int den = boost::multiprecision::denominator(wr[j]);
            denom_lcm = boost::multiprecision::lcm(denom_lcm, den);
        }
        for (int j = 0; j < n; ++j) {
            Int scaled = boost::multiprecision::numerator(wr[j]) *
                         (denom_lcm / boost::multiprecision::denominator(wr[j]));
            if (scaled > std::numeric_limits<long long>::max() / 4 ||
                scaled < std::numeric_limits<long long>::min() / 4)
                throw Infeasible("weight magnitudes out of range");
            w[j] = static_cast<long long>(scaled);
        }
    }
    throw Infeasible("constraint solving did not converge");
}

}  // namespace srdef
