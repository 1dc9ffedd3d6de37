"""Exact cellular combinatorics for the generalised Temperley-Lieb tower.

The package enumerates the single- and two-column multipartitions on a
p x d floor, their standard tableaux and residue data, the order relations
and shift orbits on them, and assembles the symbolic cell data and
decomposition matrices of the tower and its fixed-point subalgebras.
"""

from .params import (
    AlgebraParams,
    BadQuantumChar,
    ChargeCollision,
    NotDivisible,
    ParamError,
    ValidatedParams,
    validate_params,
)

__all__ = [
    "AlgebraParams",
    "BadQuantumChar",
    "ChargeCollision",
    "NotDivisible",
    "ParamError",
    "ValidatedParams",
    "validate_params",
]
