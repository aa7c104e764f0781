"""Exact Dedekind sums, lattice-point frequency tables, moment bounds and
Cauchy-Schwarz ratio geometry."""

from .core import (
    SumParams,
    dedekind_sum,
    generalized_sum,
    moment,
    moment_via_m2_bridge,
    reciprocity_rhs,
    sawtooth,
)
from .errors import DegenerateRatioError, DomainError, InapplicableBoundError

__all__ = [
    "SumParams",
    "dedekind_sum",
    "generalized_sum",
    "moment",
    "moment_via_m2_bridge",
    "reciprocity_rhs",
    "sawtooth",
    "DomainError",
    "DegenerateRatioError",
    "InapplicableBoundError",
]
