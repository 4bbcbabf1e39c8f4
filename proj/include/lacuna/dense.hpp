#pragma once

// Exact dense polynomials over Q of small degree: division, gcd, squarefree
// decomposition and factorization, plus Monte Carlo checks of lacunary
// divisibility.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lacuna/core.hpp"

namespace lacuna {

inline constexpr std::size_t kDefaultDenseGuard = std::size_t{1} << 22;

// Coefficients in a row-major box, variable 1 most significant.
class DensePoly {
public:
    DensePoly() = default;
    // Zero polynomial with the given degree bound per variable.
    DensePoly(std::size_t nvars, std::vector<std::size_t> degrees);

    static DensePoly from_lacunary(const LacunaryPoly& f, std::size_t guard = kDefaultDenseGuard);
    LacunaryPoly to_lacunary() const;

    std::size_t nvars() const noexcept { return n_; }
    // Degree bound per variable; trimmed so each top slice is nonzero.
    const std::vector<std::size_t>& degrees() const noexcept { return deg_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }

    const Coefficient& at(const std::vector<std::size_t>& exp) const;
    void set(const std::vector<std::size_t>& exp, const Coefficient& c);

    bool is_zero() const;
    bool is_constant() const;
    // Variables of positive degree.
    std::vector<std::size_t> active_variables() const;
    // Shrinks degrees to the actual ones.
    void trim();

    bool operator==(const DensePoly& o) const;
    bool operator!=(const DensePoly& o) const { return !(*this == o); }

private:
    std::size_t index(const std::vector<std::size_t>& exp) const;

    std::size_t n_ = 0;
    std::vector<std::size_t> deg_;
    std::vector<Coefficient> coeffs_;
};

struct DenseFactor {
    DensePoly factor;
    unsigned multiplicity = 1;
    // False when the factor may still split (recombination was cut short).
    bool certified = true;
};

struct FactorList {
    Coefficient unit = 1;
    std::vector<DenseFactor> factors;
};

struct Densified {
    DensePoly poly;
    ExponentVector stripped;  // the monomial X^mval(f) removed first
};

// Throws GuardExceeded when the normalized box exceeds guard coefficients.
Densified densify(const LacunaryPoly& f, std::size_t guard = kDefaultDenseGuard);
// Box size of f after normalize_mval, or nullopt when it exceeds guard.
std::optional<std::size_t> dense_size(const LacunaryPoly& f, std::size_t guard = kDefaultDenseGuard);

// Largest m with g^m | f. g non-constant, f nonzero.
unsigned divides_mult(const DensePoly& g, const DensePoly& f);
// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<DensePoly> exact_quotient(const DensePoly& f, const DensePoly& g);
DensePoly multiply(const DensePoly& f, const DensePoly& g);

// Primitive integral gcd with positive leading coefficient.
DensePoly gcd_multivariate(const DensePoly& f, const DensePoly& g);
// Primitive integral associate with positive leading coefficient.
DensePoly normalize(const DensePoly& f);

// f = unit * prod s_i^i, s_i squarefree and pairwise coprime.
FactorList squarefree_decompose(const DensePoly& f);

FactorList factor_univariate(const DensePoly& f, std::optional<unsigned> degree_cap = std::nullopt);
FactorList factor_bivariate(const DensePoly& f,
                            std::optional<std::pair<unsigned, unsigned>> caps = std::nullopt);

// Product unit * prod factor^mult.
DensePoly expand(const FactorList& fl, std::size_t nvars);

// Monte Carlo test of g | f. Each trial draws a fresh prime P in [2^61, 2^62)
// and random values for all variables but one, then reduces f modulo the
// specialized g in F_P[y]; exponents of the specialized variables are reduced
// modulo P - 1. A trial can only err by accepting, and does so with
// probability about D * deg(g) / 2^61 where D is the total degree of f, when
// D is below 2^40. Beyond that the bound is heuristic.
bool verify_divisibility(const LacunaryPoly& f, const DensePoly& g, unsigned trials,
                         std::uint64_t seed);
// Largest m such that every trial sees g^m dividing f (capped at max_mult).
unsigned verify_multiplicity(const LacunaryPoly& f, const DensePoly& g, unsigned trials,
                             std::uint64_t seed, unsigned max_mult = 64);

}  // namespace lacuna
