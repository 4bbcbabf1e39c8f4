#pragma once

#include <optional>
#include <vector>

#include "dense/mpoly.hpp"
#include "lacuna/dense.hpp"

namespace lacuna::detail {

MPoly to_mpoly(const DensePoly& f);
DensePoly to_dense(const MPoly& f);

struct MFactor {
    MPoly poly;  // normalized
    unsigned mult = 1;
    bool certified = true;
};

struct MFactorization {
    mpq_class unit = 1;
    std::vector<MFactor> factors;
};

// f nonzero with at most variable v active.
MFactorization factor_univariate_in(const MPoly& f, std::size_t v, std::optional<unsigned> cap);

// Irreducible factors of F, which is primitive integral, squarefree, of
// positive degree in v and has only variable v active.
std::vector<MFactor> factor_squarefree_univariate(const MPoly& F, std::size_t v,
                                                  std::optional<unsigned> cap);

// f has only variables vx and vy active; caps bound (deg_vx, deg_vy).
MFactorization factor_bivariate_in(const MPoly& f, std::size_t vx, std::size_t vy,
                                   std::optional<std::pair<unsigned, unsigned>> caps);

FactorList to_factor_list(const MFactorization& m);

}  // namespace lacuna::detail
