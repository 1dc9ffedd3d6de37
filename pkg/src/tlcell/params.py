"""Structure constants of the Temperley-Lieb tower and their validation.

Every other module consumes a sealed :class:`ValidatedParams`.  The tower is
determined by ``(r, p, n)`` with ``p | r``, the quantum characteristic ``e``
(0 meaning infinite order) and a list of ``d = r/p`` charges, one per charge
column of the floor.  The charges encode the dominant weight; the weight is
level ``r`` and layer-symmetric, so a single charge per column suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class ParamError(ValueError):
    """Base class for parameter validation failures."""


class NotDivisible(ParamError):
    """Raised when ``p`` does not divide ``r``."""


class BadQuantumChar(ParamError):
    """Raised when the quantum characteristic is 1, 2 or 3 (or negative)."""


class ChargeCollision(ParamError):
    """Raised when two charges violate the separation conditions."""


@dataclass
class AlgebraParams:
    """Raw, unvalidated structure constants."""

    r: int
    p: int
    n: int
    e: int
    charges: tuple[int, ...]

    @classmethod
    def from_dict(cls, data: Mapping) -> "AlgebraParams":
        missing = {"r", "p", "n", "e", "charges"} - set(data)
        if missing:
            raise ParamError(f"missing fields: {sorted(missing)}")
        unknown = set(data) - {"r", "p", "n", "e", "charges"}
        if unknown:
            raise ParamError(f"unknown fields: {sorted(unknown)}")
        return cls(
            r=data["r"],
            p=data["p"],
            n=data["n"],
            e=data["e"],
            charges=tuple(data["charges"]),
        )


@dataclass(frozen=True)
class ValidatedParams:
    """Immutable, validated structure constants.

    ``charges[l]`` is the charge of column ``l``; for ``e > 0`` it is stored
    reduced mod ``e``.  Safe for unrestricted concurrent reads.
    """

    r: int
    p: int
    n: int
    e: int
    charges: tuple[int, ...]

    @property
    def d(self) -> int:
        return self.r // self.p

    def to_raw(self) -> AlgebraParams:
        return AlgebraParams(self.r, self.p, self.n, self.e, self.charges)

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "p": self.p,
            "n": self.n,
            "e": self.e,
            "charges": list(self.charges),
        }

    def charge_set(self) -> frozenset[int]:
        """The set of charged column values (mod e when e > 0)."""
        return frozenset(self.charges)


def _check_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParamError(f"{name} must be an integer, got {value!r}")
    return value


def validate_params(raw: AlgebraParams) -> ValidatedParams:
    """Validate raw parameters and seal them.

    Raises :class:`NotDivisible`, :class:`BadQuantumChar` or
    :class:`ChargeCollision` (naming the offending charge pair) when an
    invariant fails.  Validation is idempotent: re-validating the raw form of
    a validated value returns an identical value.
    """
    if isinstance(raw, ValidatedParams):
        raw = raw.to_raw()
    r = _check_int("r", raw.r)
    p = _check_int("p", raw.p)
    n = _check_int("n", raw.n)
    e = _check_int("e", raw.e)
    if r < 1 or p < 1 or n < 1:
        raise ParamError(f"r, p, n must be positive, got ({r}, {p}, {n})")
    if r % p != 0:
        raise NotDivisible(f"NotDivisible: p={p} does not divide r={r}")
    if e < 0 or e in (1, 2, 3):
        raise BadQuantumChar(
            f"BadQuantumChar: e={e} not allowed; need e = 0 or e >= 4"
        )
    d = r // p
    charges: Iterable = raw.charges
    charges = tuple(_check_int(f"charges[{k}]", c) for k, c in enumerate(charges))
    if len(charges) != d:
        raise ParamError(
            f"expected d = r/p = {d} charges, got {len(charges)}"
        )
    if e > 0:
        charges = tuple(c % e for c in charges)

    def reduced(x: int) -> int:
        return x % e if e > 0 else x

    for l1 in range(d):
        for l2 in range(d):
            if l1 == l2:
                continue
            delta = charges[l1] - charges[l2]
            if reduced(delta) in {reduced(0), reduced(1), reduced(-1)}:
                raise ChargeCollision(
                    f"ChargeCollision: charges j_{l1}={charges[l1]} and "
                    f"j_{l2}={charges[l2]} differ by 0 or +-1 (mod e={e})"
                )
            if reduced(p * delta) in {0, 1, 2}:
                raise ChargeCollision(
                    f"ChargeCollision: p*(j_{l1} - j_{l2}) = {p * delta} "
                    f"lies in {{0, 1, 2}} (mod e={e}) for charges "
                    f"({charges[l1]}, {charges[l2]})"
                )
    return ValidatedParams(r=r, p=p, n=n, e=e, charges=charges)
