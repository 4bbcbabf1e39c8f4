"""Bounded-degree factors of lacunary polynomials over the rationals."""

from ._lacuna import (
    DEFAULT_DENSE_GUARD,
    EngineLimitation,
    GuardExceeded,
    LacunaError,
    ParseError,
    bipartition,
    factor_dense,
    factors,
    gamma,
    multivariate_partition,
    normalize,
    partition,
    verify,
)

__all__ = [
    "DEFAULT_DENSE_GUARD",
    "EngineLimitation",
    "GuardExceeded",
    "LacunaError",
    "ParseError",
    "bipartition",
    "factor_dense",
    "factors",
    "gamma",
    "multivariate_partition",
    "normalize",
    "partition",
    "verify",
]
