"""Shared parameter builders and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools

import pytest

from tlcell.combinatorics import Multipartition, Node, Tableau
from tlcell.params import AlgebraParams, ValidatedParams, validate_params


def make_params(r, p, n, e=0, charges=None) -> ValidatedParams:
    """Validated parameters with well-separated charges unless given."""
    if charges is None:
        d = r // p
        gap = n + 5
        charges = tuple(k * gap for k in range(d))
    return validate_params(AlgebraParams(r, p, n, e, tuple(charges)))


def resonant_params_list(r, p, n) -> list[ValidatedParams]:
    """Valid resonance-bearing configurations for the given tower point.

    For one charge column the only finite choices allowed by the separation
    conditions are e in {4, 5}; residue matches are then impossible, so those
    suites run vacuously.  With two or more columns, overlapping charge chains
    need a column gap s with 2 <= s <= n-1 and p*s >= 3, realised both over
    the integers (e = 0) and modulo e = p*s + 3.
    """
    d = r // p
    out = []
    if d == 1:
        for e in (4, 5):
            out.append(make_params(r, p, n, e=e, charges=(0,)))
        return out
    far = [-(n + 7) * (k + 1) for k in range(d - 2)]
    for s in range(2, n):
        if p * s < 3:
            continue
        out.append(make_params(r, p, n, e=0, charges=tuple([0, -s] + far)))
        e = p * s + 3
        if e >= 4 and d == 2:
            out.append(make_params(r, p, n, e=e, charges=(0, (-s) % e)))
    return out


def charge_grid(r, p, n) -> list[ValidatedParams]:
    return [make_params(r, p, n)] + resonant_params_list(r, p, n)


def all_fillings(shape: Multipartition) -> list[Tableau]:
    """Every bijective filling of the shape (oracle use only)."""
    nodes = shape.nodes()
    out = []
    for perm in itertools.permutations(range(1, shape.n + 1)):
        placed = dict(zip(nodes, perm))
        cols = tuple(
            tuple(placed[Node(row, box)] for row in range(1, size + 1))
            for box, size in zip(shape.boxes, shape.column_sizes())
        )
        out.append(Tableau(shape, cols))
    return out


@pytest.fixture
def params_423() -> ValidatedParams:
    return make_params(4, 2, 3)


@pytest.fixture
def params_634() -> ValidatedParams:
    return make_params(6, 3, 4)


@pytest.fixture
def params_222() -> ValidatedParams:
    return make_params(2, 2, 2)
