#pragma once

// The gap function and the partitions it drives. A summand produced here
// keeps every multidimensional factor of bounded degree of its parent, in the
// sense that mult_g(f) is the minimum of mult_g over the summands.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lacuna/core.hpp"
#include "lacuna/geometry.hpp"

namespace lacuna {

struct GapParams {
    Integer dx = 1;
    Integer dy = 1;
};

struct PartitionResult {
    std::vector<LacunaryPoly> summands;
    std::string pass;
    // Monomials removed from the summands, when they were normalized.
    // Empty means the summands add up to the input as they are.
    std::vector<ExponentVector> shifts;
};

// 4 dx dy (l-1)^2.
Integer gamma(std::size_t l, const GapParams& p);
Rational gamma_v(std::size_t l, const GapParams& p, const Rational& v);

bool no_gap(const LacunaryPoly& f, const GapParams& p, const Rational& v);

// Trace lines (block boundaries and thresholds) are appended when trace is set.
using Trace = std::vector<std::string>;

PartitionResult partition(const LacunaryPoly& f, const GapParams& p, const Rational& v,
                          Trace* trace = nullptr);

// nullopt as the second valuation selects the vertical pass, which
// partitions by the Y exponent alone.
inline constexpr std::nullopt_t kVertical = std::nullopt;

PartitionResult bipartition(const LacunaryPoly& f, const GapParams& p, const Rational& v1,
                            const std::optional<Rational>& v2, Trace* trace = nullptr);

struct BoundsVal {
    Rational v1;
    Rational v2;
    Rational inverse_gap;  // 1 / |v1 - v2|
    Rational spread;       // (|v1| + |v2|) / |v1 - v2|
    bool applicable = false;
    bool holds = true;     // meaningful only when applicable
};

BoundsVal boundsval(const Direction& p1, const Direction& p2, const GapParams& params);

// One result per pass. Passes cover every pair of non-parallel Newton polygon
// edges (lower, upper and vertical) whose directions fit the bidegree.
std::vector<PartitionResult> reduce_bivariate(const LacunaryPoly& f, const GapParams& p,
                                              Trace* trace = nullptr);

// i is 0-based.
PartitionResult univariate_partition(const LacunaryPoly& f, const Integer& delta, std::size_t i,
                                     Trace* trace = nullptr);

// Summands come back divided by their monomial content; see PartitionResult::shifts.
PartitionResult multivariate_partition(const LacunaryPoly& f, const ExponentVector& caps,
                                       Trace* trace = nullptr);

// The window used for variable i of a k-term summand by multivariate_partition.
Integer multivariate_delta(std::size_t k, const ExponentVector& caps, std::size_t i);

}  // namespace lacuna
