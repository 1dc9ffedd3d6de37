"""3D multipartitions on the p x d floor: nodes, residues, tableaux, degrees.

A multipartition here is a floor of ``p`` layers by ``d`` charge columns
carrying single-column partitions, with at most two non-empty boxes.  Shapes
are written canonically: a single box, or an ordered pair of boxes
``box1 < box2`` in the total floor order together with the column imbalance
``a = |column1| - |column2|``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .params import ValidatedParams


class NotStandard(ValueError):
    """Raised when an operation defined on standard tableaux gets a non-standard one."""


class SequenceTooShort(ValueError):
    """Raised when a residue sequence is too short for a pattern check."""


# ---------------------------------------------------------------------------
# floor, nodes, residues
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FloorIndex:
    """Box ``(i, l)`` of the floor: layer ``i`` in charge column ``l``."""

    i: int
    l: int


def floor_key(box: FloorIndex) -> tuple[int, int]:
    """Sort key realising the total floor order (charge column first, then layer)."""
    return (box.l, box.i)


@dataclass(frozen=True)
class Node:
    """The node in row ``row >= 1`` of the column sitting in ``box``."""

    row: int
    box: FloorIndex


def node_key(node: Node) -> tuple[int, int, int]:
    """Sort key for the total node order: row, then column, then layer."""
    return (node.row, node.box.l, node.box.i)


def node_order_cmp(x: Node, y: Node) -> int:
    """Total order on nodes: -1, 0 or 1 as x <, =, > y."""
    kx, ky = node_key(x), node_key(y)
    return (kx > ky) - (kx < ky)


@dataclass(frozen=True)
class Residue:
    """Quiver vertex ``(i mod p, j)``; ``j`` is reduced mod e when e > 0."""

    i: int
    j: int


def make_residue(i: int, j: int, params: ValidatedParams) -> Residue:
    return Residue(i % params.p, j % params.e if params.e > 0 else j)


def residue_of_node(node: Node, params: ValidatedParams) -> Residue:
    """Residue of the node in row ``a`` of box ``(i, l)``: ``(i, 1 - a + j_l)``."""
    box = node.box
    if not (0 <= box.i < params.p and 0 <= box.l < params.d):
        raise ValueError(f"box {box} outside the {params.p} x {params.d} floor")
    return make_residue(box.i, 1 - node.row + params.charges[box.l], params)


ResidueSequence = tuple[Residue, ...]


# ---------------------------------------------------------------------------
# shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Multipartition:
    """A single- or two-column multipartition of ``n``.

    ``boxes`` has length 1 or 2 and is sorted by the total floor order; for a
    pair, ``a`` is the first column size minus the second.
    """

    n: int
    boxes: tuple[FloorIndex, ...]
    a: int | None = None

    @property
    def is_single(self) -> bool:
        return len(self.boxes) == 1

    def column_sizes(self) -> tuple[int, ...]:
        if self.is_single:
            return (self.n,)
        assert self.a is not None
        return ((self.n + self.a) // 2, (self.n - self.a) // 2)

    def nodes(self) -> tuple[Node, ...]:
        """All nodes of the shape, sorted by the total node order."""
        out = [
            Node(row, box)
            for box, size in zip(self.boxes, self.column_sizes())
            for row in range(1, size + 1)
        ]
        out.sort(key=node_key)
        return tuple(out)


def shape_sort_key(lam: Multipartition):
    """Canonical enumeration key: singles first, then pairs by (box1, box2, a)."""
    if lam.is_single:
        return (0, floor_key(lam.boxes[0]), floor_key(lam.boxes[0]), 0)
    return (1, floor_key(lam.boxes[0]), floor_key(lam.boxes[1]), lam.a)


def make_single(box: FloorIndex, params: ValidatedParams) -> Multipartition:
    if not (0 <= box.i < params.p and 0 <= box.l < params.d):
        raise ValueError(f"box {box} outside the {params.p} x {params.d} floor")
    return Multipartition(n=params.n, boxes=(box,))


def make_pair(
    box1: FloorIndex, box2: FloorIndex, a: int, params: ValidatedParams
) -> Multipartition:
    """Pair shape with ``a`` nodes more in ``box1`` than in ``box2``.

    The boxes are re-sorted into the total floor order, negating ``a`` if the
    sort swaps them.
    """
    n = params.n
    for box in (box1, box2):
        if not (0 <= box.i < params.p and 0 <= box.l < params.d):
            raise ValueError(f"box {box} outside the {params.p} x {params.d} floor")
    if box1 == box2:
        raise ValueError("pair shape needs two distinct boxes")
    if floor_key(box1) > floor_key(box2):
        box1, box2 = box2, box1
        a = -a
    if (n + a) % 2 != 0 or not (2 - n <= a <= n - 2):
        raise ValueError(f"imbalance a={a} invalid for n={n}")
    return Multipartition(n=n, boxes=(box1, box2), a=a)


def shift_shape(lam: Multipartition, p: int) -> Multipartition:
    """Decrement every layer mod p, re-sorting pair boxes (negating ``a``) as needed."""
    boxes = [FloorIndex((box.i - 1) % p, box.l) for box in lam.boxes]
    if lam.is_single:
        return Multipartition(n=lam.n, boxes=(boxes[0],))
    assert lam.a is not None
    b1, b2 = boxes
    a = lam.a
    if floor_key(b1) > floor_key(b2):
        b1, b2 = b2, b1
        a = -a
    return Multipartition(n=lam.n, boxes=(b1, b2), a=a)


def enumerate_multipartitions(params: ValidatedParams) -> list[Multipartition]:
    """All shapes: r singles plus C(r,2)*(n-1) pairs for n >= 2, sorted canonically."""
    boxes = sorted(
        (FloorIndex(i, l) for i in range(params.p) for l in range(params.d)),
        key=floor_key,
    )
    shapes = [make_single(box, params) for box in boxes]
    n = params.n
    for box1, box2 in itertools.combinations(boxes, 2):
        for a in range(2 - n, n - 1, 2):
            shapes.append(make_pair(box1, box2, a, params))
    shapes.sort(key=shape_sort_key)
    return shapes


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """A filling of a shape with 1..n; ``columns[k]`` lists box k bottom-up."""

    shape: Multipartition
    columns: tuple[tuple[int, ...], ...]

    def is_standard(self) -> bool:
        entries = sorted(itertools.chain.from_iterable(self.columns))
        if entries != list(range(1, self.shape.n + 1)):
            return False
        return all(
            all(col[h] < col[h + 1] for h in range(len(col) - 1))
            for col in self.columns
        )

    def node_of(self, entry: int) -> Node:
        for box, col in zip(self.shape.boxes, self.columns):
            if entry in col:
                return Node(col.index(entry) + 1, box)
        raise ValueError(f"entry {entry} not in tableau")

    def entry_map(self) -> dict[int, Node]:
        return {
            entry: Node(h + 1, box)
            for box, col in zip(self.shape.boxes, self.columns)
            for h, entry in enumerate(col)
        }


def initial_tableau(shape: Multipartition) -> Tableau:
    """The unique tableau filling the nodes of ``shape`` in increasing node order."""
    cols: dict[FloorIndex, list[int]] = {box: [] for box in shape.boxes}
    for rank, node in enumerate(shape.nodes(), start=1):
        cols[node.box].append(rank)
    return Tableau(shape, tuple(tuple(cols[box]) for box in shape.boxes))


def standard_tableau_count(shape: Multipartition) -> int:
    if shape.is_single:
        return 1
    return comb(shape.n, shape.column_sizes()[0])


def tableau_permutation(t: Tableau) -> tuple[int, ...]:
    """One-line permutation sending each entry to the rank of its node."""
    ranks = {node: rank for rank, node in enumerate(t.shape.nodes(), start=1)}
    w = [0] * t.shape.n
    for entry, node in t.entry_map().items():
        w[entry - 1] = ranks[node]
    return tuple(w)


def enumerate_standard_tableaux(shape: Multipartition) -> list[Tableau]:
    """All standard tableaux, sorted by their permutation; the initial one is first."""
    if shape.is_single:
        return [initial_tableau(shape)]
    n = shape.n
    size1 = shape.column_sizes()[0]
    tabs = []
    for first in itertools.combinations(range(1, n + 1), size1):
        rest = tuple(m for m in range(1, n + 1) if m not in first)
        tabs.append(Tableau(shape, (first, rest)))
    tabs.sort(key=tableau_permutation)
    return tabs


def residue_sequence(t: Tableau, params: ValidatedParams) -> ResidueSequence:
    """Entry ``m`` of the result is the residue of the node containing ``m``."""
    nodes = t.entry_map()
    return tuple(
        residue_of_node(nodes[m], params) for m in range(1, t.shape.n + 1)
    )


def swap_entries(t: Tableau, k: int) -> Tableau:
    """The tableau ``s_k o t`` with entries ``k`` and ``k+1`` exchanged."""
    sub = {k: k + 1, k + 1: k}
    return Tableau(
        t.shape, tuple(tuple(sub.get(m, m) for m in col) for col in t.columns)
    )


# ---------------------------------------------------------------------------
# permutations and reduced words
# ---------------------------------------------------------------------------


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """(f o g)(m) = f(g(m)) for one-line permutations of 1..n."""
    return tuple(f[g[m] - 1] for m in range(len(f)))


def _transposition(n: int, k: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def lexmin_reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for ``w`` (greedy left descents)."""
    n = len(w)
    cur = list(w)
    word = []
    while True:
        pos = {v: idx for idx, v in enumerate(cur)}
        k = next((k for k in range(1, n) if pos[k] > pos[k + 1]), None)
        if k is None:
            break
        word.append(k)
        cur[pos[k]], cur[pos[k + 1]] = k + 1, k
    return tuple(word)


def permutation_from_word(n: int, word: tuple[int, ...]) -> tuple[int, ...]:
    w = tuple(range(1, n + 1))
    for k in reversed(word):
        w = _compose(_transposition(n, k), w)
    return w


def permutation_of_tableau(t: Tableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """One-line permutation ``w`` with ``t = t^shape o w``, plus its canonical word.

    ``w(m)`` is the node-order rank of the node holding entry ``m``.
    """
    if not t.is_standard():
        raise NotStandard(f"tableau {t.columns} of shape {t.shape} is not standard")
    w = tableau_permutation(t)
    return w, lexmin_reduced_word(w)


def tableau_from_permutation(shape: Multipartition, w: tuple[int, ...]) -> Tableau:
    """The tableau ``t^shape o w``: entry ``m`` sits at the node of rank ``w(m)``."""
    nodes = shape.nodes()
    placed: dict[Node, int] = {nodes[w[m - 1] - 1]: m for m in range(1, shape.n + 1)}
    cols = []
    for box, size in zip(shape.boxes, shape.column_sizes()):
        cols.append(tuple(placed[Node(row, box)] for row in range(1, size + 1)))
    return Tableau(shape, tuple(cols))


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------


def degree_of_tableau(t: Tableau, params: ValidatedParams) -> int:
    """Node degree accumulated in filling order.

    After placing entry ``m`` at node ``A``, the contribution is the number of
    addable nodes of the partial shape with the residue of ``A`` strictly after
    ``A`` in node order, minus the matching count of removable nodes.  Every
    floor box contributes one addable node (top of its column) and, when
    non-empty, one removable node.
    """
    if not t.is_standard():
        raise NotStandard("degree is defined for standard tableaux")
    floor = [FloorIndex(i, l) for i in range(params.p) for l in range(params.d)]
    heights = {box: 0 for box in floor}
    nodes = t.entry_map()
    deg = 0
    for m in range(1, t.shape.n + 1):
        node = nodes[m]
        heights[node.box] += 1
        rho = residue_of_node(node, params)
        akey = node_key(node)
        for box, h in heights.items():
            addable = Node(h + 1, box)
            if node_key(addable) > akey and residue_of_node(addable, params) == rho:
                deg += 1
            if h >= 1:
                removable = Node(h, box)
                if (
                    node_key(removable) > akey
                    and residue_of_node(removable, params) == rho
                ):
                    deg -= 1
    return deg


# ---------------------------------------------------------------------------
# Garnir tableaux and killed idempotent patterns
# ---------------------------------------------------------------------------


def garnir_tableaux(shape: Multipartition) -> list[Tableau]:
    """Non-standard tableaux one adjacent transposition away from standard."""
    seen: set[tuple] = set()
    out = []
    for t in enumerate_standard_tableaux(shape):
        for k in range(1, shape.n):
            g = swap_entries(t, k)
            if not g.is_standard() and g.columns not in seen:
                seen.add(g.columns)
                out.append(g)
    out.sort(key=lambda g: g.columns)
    return out


def killed_idempotent_pattern(seq: ResidueSequence, params: ValidatedParams) -> bool:
    """Whether ``seq`` opens like a generator of the defining ideal.

    True iff the first two entries are ``(i, j), (i, j+1)`` in one layer, or
    (for length >= 3) the first three entries are all charged columns.
    """
    if len(seq) < 2:
        raise SequenceTooShort("need at least two residues")
    first, second = seq[0], seq[1]
    if first.i == second.i:
        delta = second.j - first.j
        if (delta % params.e if params.e > 0 else delta) == 1:
            return True
    if len(seq) < 3:
        return False
    charged = params.charge_set()
    return all(res.j in charged for res in seq[:3])


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def shape_to_json(lam: Multipartition) -> dict:
    data = {
        "kind": "single" if lam.is_single else "pair",
        "boxes": [[box.i, box.l] for box in lam.boxes],
    }
    if not lam.is_single:
        data["a"] = lam.a
    return data


def shape_from_json(data: dict, params: ValidatedParams) -> Multipartition:
    boxes = [FloorIndex(i, l) for i, l in data["boxes"]]
    if data["kind"] == "single":
        return make_single(boxes[0], params)
    return make_pair(boxes[0], boxes[1], data["a"], params)


def shape_label(lam: Multipartition) -> str:
    if lam.is_single:
        box = lam.boxes[0]
        return f"s({box.i},{box.l})"
    b1, b2 = lam.boxes
    return f"p({b1.i},{b1.l})({b2.i},{b2.l})a{lam.a}"


def tableau_to_json(t: Tableau) -> dict:
    return {
        "shape": shape_to_json(t.shape),
        "columns": [list(col) for col in t.columns],
    }


@lru_cache(maxsize=None)
def _cached_std(shape: Multipartition) -> tuple[Tableau, ...]:
    return tuple(enumerate_standard_tableaux(shape))


def standard_tableaux(shape: Multipartition) -> tuple[Tableau, ...]:
    """Cached variant of :func:`enumerate_standard_tableaux`."""
    return _cached_std(shape)
