#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srdef/complex.hpp"
#include "srdef/polynomial.hpp"

namespace srdef {

/// Generators and order prescriptions for one homogeneous-space ideal,
/// indexed by the genus of the threefold sections (6..10).
struct GeneratorSet {
    int genus = 0;
    VarTable vars;
    std::vector<Polynomial> polys;
    // strict comparisons the weight vector must satisfy
    std::vector<std::pair<Monomial, Monomial>> order_constraints;
    // underdetermined comparisons; a choice vector picks one side each
    // (bit 1: first > second)
    std::vector<std::pair<Monomial, Monomial>> free_choices;
    std::vector<int> default_choices;
    long long ideal_degree = 0;  // degree of the homogeneous space, 2(genus-1)
    int delta_dim = 0;           // dimension of the joined simplex
};

/// For genus 6, `quadric` picks the extra degenerate quadric x_a x_b; the
/// variables must not appear in the Pfaffian initial monomials. The default is
/// the lexicographically first valid pair.
GeneratorSet generator_set(int genus,
                           const std::optional<std::pair<std::string, std::string>>& quadric =
                               std::nullopt);

struct SzCertificate {
    bool pass = false;
    std::string reason;  // "", "mixed-cardinality", "count>d", "wrong-complex"
    long long transversal_count = 0;
    int transversal_cardinality = -1;  // common cardinality when uniform
    int expected_codim = 0;
    long long degree_bound = 0;
};

/// Squarefree initial-term criterion: the minimal transversals of the
/// supports must be equicardinal of the expected codimension, number at most
/// the ideal degree, and the complex of the monomials must be the expected one.
SzCertificate sz_certify(const std::vector<Monomial>& monomials, const VarTable& vars,
                         const SimplicialComplex& expected, long long degree_bound);

struct DegenCertificate {
    int genus = 0;
    TermOrder order;
    std::vector<Monomial> initials;
    SzCertificate sz;
    std::string expected_name;
    bool pass = false;
};

/// Solve the declared order constraints (with the chosen resolutions of the
/// free comparisons), extract initial monomials (augmenting on ties), and run
/// the squarefree criterion against the expected sphere-join complex.
DegenCertificate certify_degeneration(
    int genus, const std::optional<std::vector<int>>& choices = std::nullopt,
    const std::optional<std::pair<std::string, std::string>>& quadric = std::nullopt);

struct ChoiceOutcome {
    std::vector<int> choices;
    std::vector<Monomial> initials;
    std::string sphere_canonical;  // canonical form of the non-simplex factor
    int sphere_vertices = 0;
    bool sphere_ok = false;  // homology 2-sphere
    bool iso_to_target = false;
};

/// Enumerate every resolution of the free comparisons (16 for genus 9,
/// 8 for genus 10) and report which initial complexes match the target
/// triangulation (the genus+1 entry of the starring series).
std::vector<ChoiceOutcome> choice_enumeration(int genus);

/// The expected initial complex: the (genus+1) 2-sphere joined with the
/// appropriate simplex.
SimplicialComplex expected_degeneration_complex(int genus);

/// Parameters of the versal family of the hexagon complex joined with Δ_m.
struct VersalParams {
    long long t[6][3] = {};                 // t[i-1][l-1]
    std::vector<std::vector<long long>> r;  // r[i-1][k], size 6 x (m+1)
    long long u[6] = {};
    long long s[3] = {};
};

struct VersalFamily {
    int m = -1;
    VarTable vars;  // ring variables x (hexagon diagonals), y0..ym, then parameters
    std::vector<std::vector<Polynomial>> equation_terms;  // 15 equations, displayed term order
    std::vector<int> ring_var_ids;                        // x and y ids
    std::vector<int> param_ids;                           // t, r, u, s ids
};

/// The 15-equation family in symbolic form (parameters as extra variables).
VersalFamily versal_a6_symbolic(int m);

/// The family at specific integer parameter values, as polynomials in the
/// ring variables only.
std::vector<Polynomial> versal_a6(int m, const VersalParams& params);

}  // namespace srdef
