#pragma once

// Unidimensional factors: components along a direction, projection to a
// univariate polynomial and lifting back.

#include <cstdint>
#include <optional>
#include <vector>

#include "lacuna/core.hpp"
#include "lacuna/dense.hpp"
#include "lacuna/geometry.hpp"

namespace lacuna {

struct UnidimDecomposition {
    Direction direction;
    std::vector<LacunaryPoly> components;  // in order of first term
};

struct Projection {
    LacunaryPoly poly;      // univariate, nonzero constant term
    ExponentVector anchor;  // f = X^anchor * poly(X^d)
};

enum class FactorKind { Monomial, Unidimensional, Multidimensional };

struct FactorWithMultiplicity {
    LacunaryPoly factor;
    unsigned multiplicity = 1;
    FactorKind kind = FactorKind::Unidimensional;
};

UnidimDecomposition components(const LacunaryPoly& f, const Direction& d);
Projection project(const LacunaryPoly& f, const Direction& d);
LacunaryPoly lift(const LacunaryPoly& g, const Direction& d);
// floor(min_i bounds_i / |d_i|) over d_i != 0, or nullopt when it is 0.
std::optional<Integer> projection_degree_bound(const ExponentVector& bounds, const Direction& d);

class UnivariateFactorEngine {
public:
    struct Factor {
        LacunaryPoly poly;  // irreducible, primitive, positive leading coefficient
        unsigned multiplicity = 1;
    };

    virtual ~UnivariateFactorEngine() = default;
    // Irreducible factors of p of degree at most cap. p has valuation 0.
    // Throws EngineLimitation when p is out of reach.
    virtual std::vector<Factor> factor(const LacunaryPoly& p, const Integer& cap) const = 0;
    // Multiplicity of the irreducible q in p.
    virtual unsigned multiplicity(const LacunaryPoly& q, const LacunaryPoly& p) const = 0;
};

// Densifies projections up to a guard. Past the guard only linear factors
// are searched for (rational roots), so a cap above 1 there is a limitation.
class DenseUnivariateEngine : public UnivariateFactorEngine {
public:
    explicit DenseUnivariateEngine(std::size_t guard = kDefaultDenseGuard, unsigned trials = 8,
                                   std::uint64_t seed = 0)
        : guard_(guard), trials_(trials), seed_(seed) {}

    std::vector<Factor> factor(const LacunaryPoly& p, const Integer& cap) const override;
    unsigned multiplicity(const LacunaryPoly& q, const LacunaryPoly& p) const override;

private:
    std::size_t guard_;
    unsigned trials_;
    std::uint64_t seed_;
};

struct UnidimOptions {
    DeltaKind screen = DeltaKind::One;  // One or Three
};

// When unresolved is non-null, directions whose projections exceed the
// engine are recorded there instead of aborting the whole computation.
std::vector<FactorWithMultiplicity> unidimensional_factors(const LacunaryPoly& f,
                                                           const ExponentVector& bounds,
                                                           const UnivariateFactorEngine& engine,
                                                           const UnidimOptions& options = {},
                                                           std::vector<Direction>* unresolved = nullptr);

}  // namespace lacuna
