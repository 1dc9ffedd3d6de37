"""Exact arithmetic in the ring of integers of the p-th cyclotomic field.

Elements are integer vectors in the power basis 1, z, ..., z^(m-1) where m is
the degree of the p-th cyclotomic polynomial; reduction modulo that polynomial
keeps every operation exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _poly_divmod_exact(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; coefficients low to high."""
    assert den[-1] == 1, "divisor must be monic"
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        coeff = num[k + len(den) - 1]
        if coeff:
            q[k] = coeff
            for j, b in enumerate(den):
                num[k + j] -= coeff * b
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Monic coefficients (low to high) of the cyclotomic polynomial of ``order``."""
    if order < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (order - 1) + [1]  # x^order - 1
    for div in range(1, order):
        if order % div == 0:
            q, rem = _poly_divmod_exact(poly, list(cyclotomic_polynomial(div)))
            assert rem == [0], "cyclotomic division must be exact"
            poly = q
    return tuple(poly)


def _reduce(coeffs: list[int], order: int) -> tuple[int, ...]:
    phi = list(cyclotomic_polynomial(order))
    deg = len(phi) - 1
    _, rem = _poly_divmod_exact(list(coeffs), phi)
    rem = rem + [0] * (deg - len(rem))
    return tuple(rem[:deg])


@dataclass(frozen=True)
class CycInt:
    """An element of Z[z] with z a primitive root of unity of ``order``."""

    order: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_int(cls, value: int, order: int) -> "CycInt":
        return cls(order, _reduce([value], order))

    @classmethod
    def zero(cls, order: int) -> "CycInt":
        return cls.from_int(0, order)

    @classmethod
    def one(cls, order: int) -> "CycInt":
        return cls.from_int(1, order)

    @classmethod
    def zeta_power(cls, order: int, k: int) -> "CycInt":
        k %= order
        return cls(order, _reduce([0] * k + [1], order))

    def _check(self, other: "CycInt") -> None:
        if self.order != other.order:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(
            self.order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycInt") -> "CycInt":
        return self + (-other)

    def __mul__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(
            self.order, _reduce(_poly_mul(list(self.coeffs), list(other.coeffs)), self.order)
        )

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"CycInt(order={self.order}, coeffs={self.coeffs})"
