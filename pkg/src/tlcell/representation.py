"""Cell-module dimensions, the quotient map, and decomposition matrices.

The fixed subalgebra maps onto the small tower (one layer, d charge columns)
with kernel spanned by the basis elements of irreducible orbit classes.  The
decomposition matrix over orbit classes is the identity on irreducible
classes; between reducible classes the entry is 1 exactly when the original
representatives compare in the chosen order and some standard tableau of the
smaller one reproduces the initial residue sequence of the larger.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cellular import BasisLabel, FormalSum, build_datum_rpn
from .combinatorics import (
    Multipartition,
    Tableau,
    ResidueSequence,
    enumerate_multipartitions,
    garnir_tableaux,
    initial_tableau,
    residue_sequence,
    shape_label,
    shape_sort_key,
    standard_tableaux,
)
from .orbits import OrbitClass, orbit_classes, original_representative
from .orders import (
    dominance_leq,
    linear_extension,
    orbit_leq_p,
    shape_leq,
    shape_leq_prime_stable,
)
from .params import ValidatedParams

ORDER_CHOICES = ("dominance", "shape", "shape_prime")


def _order_fn(order_used: str):
    if order_used == "dominance":
        return lambda lam, mu: dominance_leq(lam, mu)
    if order_used in ("shape", "shape_prime"):
        return lambda lam, mu: shape_leq(order_used, lam, mu)
    raise ValueError(f"unknown order {order_used!r}")


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------


def cell_module_dims(params: ValidatedParams) -> dict[OrbitClass, int]:
    """1 for single classes, binom(n, (n-a)/2) for pair classes."""
    dims = {}
    for cls in orbit_classes(params):
        lam = cls.canonical
        if lam.is_single:
            dims[cls] = 1
        else:
            assert lam.a is not None
            dims[cls] = comb(lam.n, (lam.n - lam.a) // 2)
    return dims


def algebra_dim_formula(params: ValidatedParams) -> int:
    """(1/p)(C(r,2) C(2n,n) - r^2 + 2r); reduces to d when n = 1."""
    r, p, n = params.r, params.p, params.n
    value = Fraction(comb(r, 2) * comb(2 * n, n) - r * r + 2 * r, p)
    if value.denominator != 1:
        raise ArithmeticError(f"dimension formula not integral at (r={r}, p={p}, n={n})")
    return int(value)


def kernel_dimension(params: ValidatedParams) -> int:
    """Sum over irreducible classes of the squared tableau-class count."""
    from .cellular import tableau_classes

    total = 0
    for cls in orbit_classes(params):
        if not cls.reducible:
            total += len(tableau_classes(cls, params)) ** 2
    return total


# ---------------------------------------------------------------------------
# the quotient map onto the small tower
# ---------------------------------------------------------------------------


def small_tower_params(params: ValidatedParams) -> ValidatedParams:
    """Parameters of the one-layer quotient target: (d, 1, n, e, same charges)."""
    from .params import AlgebraParams, validate_params

    return validate_params(
        AlgebraParams(params.d, 1, params.n, params.e, params.charges)
    )


def quotient_map_image(entry, params: ValidatedParams) -> BasisLabel | None:
    """Image of a fixed-subalgebra basis element in the small tower, or None.

    ``entry`` is an ``(orbit class, s class, t class, formal sum)`` tuple from
    the specialised datum.  Reducible classes map to the triple at the
    original representative; irreducible classes map to zero.
    """
    cls, s_cls, t_cls, _ = entry
    if not cls.reducible:
        return None
    mu0 = original_representative(cls)
    return BasisLabel(mu0, s_cls.member_with_shape(mu0), t_cls.member_with_shape(mu0))


# ---------------------------------------------------------------------------
# residue matching
# ---------------------------------------------------------------------------


def standard_tableau_with_residues(
    shape: Multipartition, target: ResidueSequence, params: ValidatedParams
) -> Tableau | None:
    """A standard tableau of ``shape`` with the given residue sequence, if any.

    Depth-first over column tops with greedy prefix pruning: entry m goes on
    top of a column only when that node carries the required residue.
    """
    from .combinatorics import Node, residue_of_node

    if len(target) != shape.n:
        return None
    sizes = shape.column_sizes()
    boxes = shape.boxes
    column_residues = [
        [residue_of_node(Node(row, box), params) for row in range(1, size + 1)]
        for box, size in zip(boxes, sizes)
    ]
    heights = [0] * len(boxes)
    placement: list[int] = []

    def search(m: int) -> bool:
        if m > shape.n:
            return True
        for c in range(len(boxes)):
            if heights[c] < sizes[c] and column_residues[c][heights[c]] == target[m - 1]:
                heights[c] += 1
                placement.append(c)
                if search(m + 1):
                    return True
                placement.pop()
                heights[c] -= 1
        return False

    if not search(1):
        return None
    cols: list[list[int]] = [[] for _ in boxes]
    for m, c in enumerate(placement, start=1):
        cols[c].append(m)
    return Tableau(shape, tuple(tuple(col) for col in cols))


def residue_match_exists(
    lam0: Multipartition, mu0: Multipartition, params: ValidatedParams
) -> tuple[bool, Tableau | None]:
    """Whether some standard tableau of lam0 matches the initial residues of mu0."""
    target = residue_sequence(initial_tableau(mu0), params)
    witness = standard_tableau_with_residues(lam0, target, params)
    return witness is not None, witness


def residue_match_bruteforce(
    lam0: Multipartition, mu0: Multipartition, params: ValidatedParams
) -> bool:
    """Independent oracle: full standard-tableau enumeration, no pruning."""
    target = residue_sequence(initial_tableau(mu0), params)
    return any(
        residue_sequence(t, params) == target for t in standard_tableaux(lam0)
    )


# ---------------------------------------------------------------------------
# decomposition matrix
# ---------------------------------------------------------------------------


@dataclass
class DecompositionMatrix:
    """Square 0/1 matrix over orbit classes with provenance and diagnostics."""

    classes: tuple[OrbitClass, ...]
    entries: tuple[tuple[int, ...], ...]
    order_used: str
    diagnostics: tuple[str, ...] = ()
    witnesses: dict = field(default_factory=dict)

    def row_labels(self) -> list[str]:
        return [cls.label() for cls in self.classes]

    def to_csv(self) -> str:
        header = "," + ",".join(self.row_labels())
        lines = [header]
        for cls, row in zip(self.classes, self.entries):
            lines.append(cls.label() + "," + ",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    def is_identity(self) -> bool:
        return all(
            value == int(ir == ic)
            for ir, row in enumerate(self.entries)
            for ic, value in enumerate(row)
        )


def decomposition_matrix(
    params: ValidatedParams,
    order_used: str = "dominance",
    want_witnesses: bool = False,
    jobs: int = 1,
) -> DecompositionMatrix:
    """Decomposition matrix of the fixed subalgebra over its orbit classes.

    Irreducible classes contribute identity rows and columns.  For reducible
    classes the entry is 1 iff the original representatives compare under the
    chosen order and a standard tableau of the row class reproduces the
    initial residue sequence of the column class.
    """
    if order_used not in ORDER_CHOICES:
        raise ValueError(f"order_used must be one of {ORDER_CHOICES}")
    leq = _order_fn(order_used)
    classes = tuple(orbit_classes(params))
    diagnostics: list[str] = []
    witnesses: dict[tuple[str, str], Tableau] = {}

    def cell(pair: tuple[int, int]) -> int:
        ir, ic = pair
        row_cls, col_cls = classes[ir], classes[ic]
        if ir == ic:
            return 1
        if not row_cls.reducible or not col_cls.reducible:
            return 0
        lam0 = original_representative(row_cls)
        mu0 = original_representative(col_cls)
        if not leq(lam0, mu0):
            return 0
        found, witness = residue_match_exists(lam0, mu0, params)
        if found and want_witnesses and witness is not None:
            witnesses[(row_cls.label(), col_cls.label())] = witness
        return int(found)

    pairs = list(itertools.product(range(len(classes)), repeat=2))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(cell, pairs))
    else:
        values = [cell(pair) for pair in pairs]
    size = len(classes)
    entries = tuple(
        tuple(values[ir * size + ic] for ic in range(size)) for ir in range(size)
    )
    for other in ORDER_CHOICES:
        if other == order_used:
            continue
        alt = _order_fn(other)
        for ir, ic in pairs:
            if ir == ic:
                continue
            row_cls, col_cls = classes[ir], classes[ic]
            if not (row_cls.reducible and col_cls.reducible):
                continue
            lam0 = original_representative(row_cls)
            mu0 = original_representative(col_cls)
            if bool(leq(lam0, mu0)) != bool(alt(lam0, mu0)) and residue_match_exists(
                lam0, mu0, params
            )[0]:
                diagnostics.append(
                    f"order choice matters at ({row_cls.label()}, {col_cls.label()}): "
                    f"{order_used}={leq(lam0, mu0)} vs {other}={alt(lam0, mu0)}"
                )
    return DecompositionMatrix(
        classes=classes,
        entries=entries,
        order_used=order_used,
        diagnostics=tuple(diagnostics),
        witnesses=witnesses,
    )


def check_matrix_properties(matrix: DecompositionMatrix) -> list[str]:
    """Structural requirements: 0/1 entries, unit diagonal, identity rows and
    columns at irreducible classes, unitriangularity along the orbit order."""
    problems = []
    size = len(matrix.classes)
    for row in matrix.entries:
        if any(value not in (0, 1) for value in row):
            problems.append("entries outside {0, 1}")
            break
    for idx in range(size):
        if matrix.entries[idx][idx] != 1:
            problems.append(f"diagonal zero at {matrix.classes[idx].label()}")
    for idx, cls in enumerate(matrix.classes):
        if cls.reducible:
            continue
        if any(matrix.entries[idx][jc] for jc in range(size) if jc != idx) or any(
            matrix.entries[jr][idx] for jr in range(size) if jr != idx
        ):
            problems.append(f"irreducible class {cls.label()} is not a unit vector")
    order = linear_extension(list(matrix.classes), orbit_leq_p)
    position = {cls: k for k, cls in enumerate(order)}
    for ir, row_cls in enumerate(matrix.classes):
        for ic, col_cls in enumerate(matrix.classes):
            if ir != ic and matrix.entries[ir][ic] and not (
                position[row_cls] < position[col_cls]
            ):
                problems.append(
                    f"entry ({row_cls.label()}, {col_cls.label()}) breaks "
                    f"unitriangularity"
                )
    return problems


# ---------------------------------------------------------------------------
# lemma suites
# ---------------------------------------------------------------------------


@dataclass
class LemmaReport:
    """Counterexample scan for the two residue-match order lemmas."""

    params: ValidatedParams
    hypothesis_order: str
    initial_matches: int = 0
    garnir_matches: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    @property
    def vacuous(self) -> bool:
        return self.initial_matches == 0 and self.garnir_matches == 0


def lemma_property_suite(
    params: ValidatedParams,
    hypothesis_order: str = "shape",
    conclusion_override=None,
) -> LemmaReport:
    """Scan all strictly ordered shape pairs for the two lemma implications.

    Whenever a standard tableau of the smaller shape matches the initial (or
    a Garnir) residue sequence of the larger shape, the pair must also compare
    strictly in the prime order.  ``conclusion_override`` replaces the prime
    order and exists as a mutation hook for negative controls.
    """
    report = LemmaReport(params=params, hypothesis_order=hypothesis_order)
    hyp = _order_fn(hypothesis_order)
    conclusion = conclusion_override or (
        lambda lam, mu: shape_leq_prime_stable(lam, mu, params.p)
    )
    shapes = enumerate_multipartitions(params)
    garnir_cache = {mu: garnir_tableaux(mu) for mu in shapes}
    for lam, mu in itertools.permutations(shapes, 2):
        if not hyp(lam, mu):
            continue
        found, _ = residue_match_exists(lam, mu, params)
        if found:
            report.initial_matches += 1
            if not (conclusion(lam, mu) and lam != mu):
                report.counterexamples.append(
                    f"initial-residue match {shape_label(lam)} < {shape_label(mu)} "
                    f"without prime comparison"
                )
        for g in garnir_cache[mu]:
            target = residue_sequence(g, params)
            if standard_tableau_with_residues(lam, target, params) is not None:
                report.garnir_matches += 1
                if not (conclusion(lam, mu) and lam != mu):
                    report.counterexamples.append(
                        f"garnir match {shape_label(lam)} < {shape_label(mu)} "
                        f"without prime comparison"
                    )
                break
    return report


# ---------------------------------------------------------------------------
# residue disjointness across classes
# ---------------------------------------------------------------------------


def class_residue_sets(params: ValidatedParams) -> dict[OrbitClass, frozenset]:
    """All residue sequences of standard tableaux across each orbit class."""
    out = {}
    for cls in orbit_classes(params):
        seqs = set()
        for lam in cls.representatives:
            for t in standard_tableaux(lam):
                seqs.add(residue_sequence(t, params))
        out[cls] = frozenset(seqs)
    return out


def irreducible_residue_disjointness(params: ValidatedParams) -> list[str]:
    """Violations of residue disjointness between irreducible and other classes."""
    sets = class_residue_sets(params)
    problems = []
    classes = list(sets)
    for cls in classes:
        if cls.reducible:
            continue
        for other in classes:
            if other == cls:
                continue
            if sets[cls] & sets[other]:
                problems.append(
                    f"residue overlap between {cls.label()} and {other.label()}"
                )
    return problems
