#pragma once

// End-to-end computation of the bounded-degree factors of a lacunary
// polynomial, and checks of claimed factors.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lacuna/core.hpp"
#include "lacuna/dense.hpp"
#include "lacuna/gap.hpp"
#include "lacuna/geometry.hpp"
#include "lacuna/unidim.hpp"

namespace lacuna {

struct FactorOptions {
    bool unidimensional = true;
    bool multidimensional = true;
    std::uint64_t seed = 0;
    unsigned trials = 8;
    std::size_t dense_guard = kDefaultDenseGuard;
    DeltaKind screen = DeltaKind::One;
    Trace* trace = nullptr;
};

enum class CertificateMode { Exact, Probabilistic };

struct Certificate {
    LacunaryPoly factor;
    unsigned multiplicity = 0;
    CertificateMode mode = CertificateMode::Exact;
    unsigned trials = 0;
    std::uint64_t seed = 0;
};

struct FactorReport {
    std::size_t nvars = 0;
    ExponentVector monomial;
    std::vector<FactorWithMultiplicity> unidimensional;
    std::vector<FactorWithMultiplicity> multidimensional;
    // Reduced instances in three or more variables left to an external engine.
    std::vector<DensePoly> residual;
    // Directions whose projections the univariate engine could not handle.
    std::vector<Direction> unresolved;
    std::vector<Certificate> certificates;
    std::vector<std::string> warnings;

    std::uint64_t seed = 0;
    unsigned trials = 0;
    std::size_t guard = 0;
};

FactorReport bounded_degree_factors(const LacunaryPoly& f, const ExponentVector& caps,
                                    const FactorOptions& options = {});

struct Claim {
    LacunaryPoly factor;
    unsigned multiplicity = 1;
};

struct ClaimVerdict {
    LacunaryPoly factor;
    unsigned claimed = 0;
    unsigned found = 0;
    CertificateMode mode = CertificateMode::Exact;
    bool match() const { return claimed == found; }
};

std::vector<ClaimVerdict> verify_factors(const LacunaryPoly& f, const std::vector<Claim>& claims,
                                         unsigned trials, std::uint64_t seed,
                                         std::size_t guard = kDefaultDenseGuard);

// Machine-readable output; indent < 0 gives a single line.
std::string to_json(const FactorReport& report, int indent = 2);
std::string to_json(const std::vector<ClaimVerdict>& verdicts, int indent = 2);
std::string to_json(const PartitionResult& result, int indent = 2);

}  // namespace lacuna
