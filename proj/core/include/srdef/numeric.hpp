#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace srdef {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Number of triangulations of a convex (n)-gon, n >= 2 (1 for degenerate n=2).
inline Int polygon_triangulations(long long n) {
    if (n <= 3) return 1;
    // Catalan number C_{n-2}
    return binomial(2 * (n - 2), n - 2) / (n - 1);
}

}  // namespace srdef
