#pragma once

#include <string>
#include <vector>

#include "srdef/complex.hpp"
#include "srdef/numeric.hpp"

namespace srdef {

/// A squarefree monomial ideal: generators are vertex subsets of a declared
/// ambient variable set, pairwise non-dividing.
struct SquarefreeMonomialIdeal {
    std::vector<std::string> variables;
    std::vector<Mask> generators;  // antichain, sorted

    std::vector<std::vector<std::string>> generator_labels() const;
};

SquarefreeMonomialIdeal sr_ideal(const SimplicialComplex& k);
SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal);

/// Number of facets; requires a pure complex.
long long degree(const SimplicialComplex& k);

/// Dense univariate polynomial with exact rational coefficients.
struct RationalPoly {
    std::vector<Rational> c;  // c[i] multiplies t^i

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
    Rational eval(const Rational& t) const {
        Rational v = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
        return v;
    }
    bool operator==(const RationalPoly&) const = default;
};

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_scale(const RationalPoly& a, const Rational& s);

/// Numerator of the Hilbert series over (1-t)^{dim+1}, from the f-vector.
RationalPoly hilbert_series_numerator(const SimplicialComplex& k);

/// Hilbert polynomial of the Stanley-Reisner ring, from the f-vector:
/// P(t) = Σ f_{i-1} C(t-1, i-1).
RationalPoly hilbert_polynomial(const SimplicialComplex& k);

/// For a pure 3-dimensional K (with f0 vertices, f3 facets), the Hilbert
/// polynomial of the scheme of K * Δ0:
///   f3/24 t^4 + f3/12 t^3 + (f0/2 - f3/24) t^2 + (f0/2 - f3/12) t + 1.
RationalPoly hilbert_poly_fano4(const SimplicialComplex& k);

}  // namespace srdef
