"""Cell data as symbolic structures.

Three constructions live here: the cellular datum of the big algebra on the
prime shape order, the generic fixed-point quotient of a cell datum under a
shift triple (with exact cyclotomic coefficients), and the specialised datum
of the fixed subalgebra built directly from orbit classes.  Basis elements are
opaque labels; the quotient basis lives in the free module over cyclotomic
integers on those labels.  A fully multiplicative toy algebra (two truncated
polynomial rings glued by a swap) closes the module and is the one place the
cell axioms are verified by genuine multiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

from .combinatorics import (
    Multipartition,
    Tableau,
    degree_of_tableau,
    enumerate_multipartitions,
    shape_label,
    shape_sort_key,
    standard_tableaux,
    tableau_permutation,
)
from .cyclotomic import CycInt
from .orbits import (
    OrbitClass,
    orbit_classes,
    sigma_shape,
    sigma_tableau,
    verify_shift_conditions,
)
from .orders import orbit_leq_p, shape_leq_prime_stable
from .params import ValidatedParams


class ShiftConditionViolated(ValueError):
    """Raised when a quotient is requested for a non-conforming shift triple."""


# ---------------------------------------------------------------------------
# labels and formal sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisLabel:
    """The symbolic triple indexing one cellular basis element."""

    shape: Multipartition
    s: Tableau
    t: Tableau


def basis_label_key(label: BasisLabel):
    return (shape_sort_key(label.shape), label.s.columns, label.t.columns)


@dataclass(frozen=True)
class FormalSum:
    """A cyclotomic-integer combination of basis labels; zero terms dropped."""

    terms: tuple[tuple[BasisLabel, CycInt], ...]

    @classmethod
    def from_dict(cls, data: dict[BasisLabel, CycInt]) -> "FormalSum":
        items = [(label, coeff) for label, coeff in data.items() if coeff]
        items.sort(key=lambda item: basis_label_key(item[0]))
        return cls(tuple(items))

    def labels(self) -> tuple[BasisLabel, ...]:
        return tuple(label for label, _ in self.terms)


# ---------------------------------------------------------------------------
# cell datum container
# ---------------------------------------------------------------------------


@dataclass
class CellDatum:
    """A (skew) cell datum with symbolic basis.

    ``entries`` lists, in deterministic order, one ``(label, s, t, element)``
    per basis element; ``element`` is a :class:`BasisLabel` for plain data and
    a :class:`FormalSum` for quotient data.  ``involution`` maps labels to
    labels (tableau bijections are identities throughout) and is ``None`` for
    plain cellular data.
    """

    kind: str
    labels: tuple
    leq: Callable[[Hashable, Hashable], bool]
    tableaux: dict
    degrees: dict
    entries: tuple
    involution: dict | None = None

    @property
    def basis(self) -> tuple:
        return tuple(entry[3] for entry in self.entries)

    def basis_count(self) -> int:
        return len(self.entries)


def validate_datum(datum: CellDatum) -> list[str]:
    """Structural checks: basis size, duplicate labels, involution axioms."""
    problems = []
    expected = sum(len(tabs) ** 2 for tabs in datum.tableaux.values())
    if expected != len(datum.entries):
        problems.append(
            f"basis count {len(datum.entries)} != sum of squares {expected}"
        )
    if len(set(datum.labels)) != len(datum.labels):
        problems.append("duplicate cell labels")
    keys = {(entry[0], entry[1], entry[2]) for entry in datum.entries}
    if len(keys) != len(datum.entries):
        problems.append("duplicate basis triples")
    for label in datum.labels:
        if len(datum.degrees[label]) != len(datum.tableaux[label]):
            problems.append(f"degree list size mismatch at {label}")
    if datum.involution is not None:
        for label in datum.labels:
            image = datum.involution[label]
            if image not in datum.tableaux:
                problems.append(f"involution leaves the label set at {label}")
            elif datum.involution[image] != label:
                problems.append(f"involution not an involution at {label}")
            elif len(datum.tableaux[image]) != len(datum.tableaux[label]):
                problems.append(f"involution breaks tableau counts at {label}")
    return problems


# ---------------------------------------------------------------------------
# the big algebra's datum
# ---------------------------------------------------------------------------


def build_datum_r1n(params: ValidatedParams) -> CellDatum:
    """Cell datum of the big algebra: all shapes under the stabilised prime order."""
    shapes = tuple(enumerate_multipartitions(params))
    p = params.p
    tableaux = {lam: standard_tableaux(lam) for lam in shapes}
    degrees = {
        lam: tuple(degree_of_tableau(t, params) for t in tabs)
        for lam, tabs in tableaux.items()
    }
    entries = tuple(
        (lam, s, t, BasisLabel(lam, s, t))
        for lam in shapes
        for s in tableaux[lam]
        for t in tableaux[lam]
    )
    return CellDatum(
        kind="r1n",
        labels=shapes,
        leq=lambda lam, mu: shape_leq_prime_stable(lam, mu, p),
        tableaux=tableaux,
        degrees=degrees,
        entries=entries,
    )


# ---------------------------------------------------------------------------
# the shift triple on labels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShiftTriple:
    """Compatible actions on cell labels, tableaux and basis labels."""

    p: int
    shape_map: Callable[[Multipartition], Multipartition]
    tableau_map: Callable[[Tableau], Tableau]

    def label_map(self, label: BasisLabel) -> BasisLabel:
        return BasisLabel(
            self.shape_map(label.shape),
            self.tableau_map(label.s),
            self.tableau_map(label.t),
        )

    def sum_map(self, element: FormalSum) -> FormalSum:
        return FormalSum.from_dict(
            {self.label_map(label): coeff for label, coeff in element.terms}
        )


def tl_shift(params: ValidatedParams) -> ShiftTriple:
    shape_memo: dict[Multipartition, Multipartition] = {}
    tab_memo: dict[Tableau, Tableau] = {}

    def shape_map(lam: Multipartition) -> Multipartition:
        if lam not in shape_memo:
            shape_memo[lam] = sigma_shape(lam, params)
        return shape_memo[lam]

    def tableau_map(t: Tableau) -> Tableau:
        if t not in tab_memo:
            tab_memo[t] = sigma_tableau(t, params)
        return tab_memo[t]

    return ShiftTriple(p=params.p, shape_map=shape_map, tableau_map=tableau_map)


# ---------------------------------------------------------------------------
# generic fixed-point quotient
# ---------------------------------------------------------------------------


def _orbit_of(x, step: Callable, limit: int) -> list:
    orbit = [x]
    cur = step(x)
    while cur != x:
        orbit.append(cur)
        if len(orbit) > limit:
            raise ShiftConditionViolated("orbit does not close within the order")
        cur = step(cur)
    return orbit


def quotient_skew_datum(
    datum: CellDatum,
    shift: ShiftTriple,
    p: int | None = None,
    label_key: Callable = shape_sort_key,
) -> CellDatum:
    """Skew cell datum of the fixed points under ``shift``.

    Implements the orbit construction: labels are (orbit representative, k)
    with k running over the common tableau-orbit length, tableau sets are
    orbit representatives, and each quotient basis element is the coefficient
    sum over the orbit with root-of-unity weights.
    """
    p = shift.p if p is None else p
    label_orbits: dict = {}
    seen = set()
    for label in datum.labels:
        if label in seen:
            continue
        orbit = _orbit_of(label, shift.shape_map, p)
        seen.update(orbit)
        rep = min(orbit, key=label_key)
        label_orbits[rep] = orbit

    # condition (a): the tableau map must respect cells and degrees
    for label in datum.labels:
        image_label = shift.shape_map(label)
        images = [shift.tableau_map(t) for t in datum.tableaux[label]]
        if set(images) != set(datum.tableaux[image_label]):
            raise ShiftConditionViolated(
                f"tableau map is not a bijection onto the shifted cell at {label}"
            )
        deg_of = dict(zip(datum.tableaux[label], datum.degrees[label]))
        image_deg_of = dict(
            zip(datum.tableaux[image_label], datum.degrees[image_label])
        )
        for t, image in zip(datum.tableaux[label], images):
            if deg_of[t] != image_deg_of[image]:
                raise ShiftConditionViolated(f"degree not preserved at {label}")

    quotient_labels = []
    tableaux = {}
    degrees = {}
    entries = []
    involution = {}
    for rep in sorted(label_orbits, key=label_key):
        orbit = label_orbits[rep]
        o_lam = len(orbit)
        sigma_lam = lambda t, k=o_lam: _iterate(shift.tableau_map, t, k)
        tab_orbits = []
        seen_tabs = set()
        for t in datum.tableaux[rep]:
            if t in seen_tabs:
                continue
            t_orbit = _orbit_of(t, sigma_lam, p)
            seen_tabs.update(t_orbit)
            tab_orbits.append(t_orbit)
        sizes = {len(t_orbit) for t_orbit in tab_orbits}
        if len(sizes) > 1:
            raise ShiftConditionViolated(
                f"tableau orbits at {rep} have mixed sizes {sizes} (condition c)"
            )
        o_t = sizes.pop() if sizes else 1
        reps = sorted((t_orbit[0] for t_orbit in tab_orbits), key=tableau_permutation)
        deg_lookup = dict(
            zip((t.columns for t in datum.tableaux[rep]), datum.degrees[rep])
        )
        zeta_lam = CycInt.zeta_power(p, p // o_t) if o_t else CycInt.one(p)
        for k in range(o_t):
            qlabel = (rep, k)
            quotient_labels.append(qlabel)
            tableaux[qlabel] = tuple(reps)
            degrees[qlabel] = tuple(deg_lookup[t.columns] for t in reps)
            involution[qlabel] = (rep, (-k) % o_t)
        for k in range(o_t):
            qlabel = (rep, k)
            for s_tab, t_tab in itertools.product(reps, repeat=2):
                acc: dict[BasisLabel, CycInt] = {}
                coeff_pow = 1
                for j in range(o_t):
                    coeff = _cyc_pow(zeta_lam, k * j, p)
                    base = BasisLabel(rep, s_tab, _iterate(sigma_lam, t_tab, j))
                    term = base
                    for _ in range(p):
                        acc[term] = acc.get(term, CycInt.zero(p)) + coeff
                        term = shift.label_map(term)
                entries.append((qlabel, s_tab, t_tab, FormalSum.from_dict(acc)))

    strict = {}

    def orbit_strict_lt(rep1, rep2) -> bool:
        key = (rep1, rep2)
        if key not in strict:
            strict[key] = any(
                datum.leq(lam, rep2) and lam != rep2 for lam in label_orbits[rep1]
            ) or any(
                datum.leq(rep1, mu) and rep1 != mu for mu in label_orbits[rep2]
            )
        return strict[key]

    def quotient_leq(x, y) -> bool:
        if x == y:
            return True
        return orbit_strict_lt(x[0], y[0])

    return CellDatum(
        kind="skew",
        labels=tuple(quotient_labels),
        leq=quotient_leq,
        tableaux=tableaux,
        degrees=degrees,
        entries=tuple(entries),
        involution=involution,
    )


def _iterate(fn: Callable, x, k: int):
    for _ in range(k):
        x = fn(x)
    return x


def _cyc_pow(base: CycInt, exponent: int, order: int) -> CycInt:
    out = CycInt.one(order)
    for _ in range(exponent):
        out = out * base
    return out


# ---------------------------------------------------------------------------
# the specialised fixed-subalgebra datum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableauClass:
    """A shift orbit of standard tableaux across the shapes of one orbit class."""

    members: tuple[Tableau, ...]

    @property
    def rep(self) -> Tableau:
        return self.members[0]

    def member_with_shape(self, shape: Multipartition) -> Tableau:
        for t in self.members:
            if t.shape == shape:
                return t
        raise KeyError(f"no member of shape {shape_label(shape)}")


def tableau_class_key(cls: TableauClass):
    return (shape_sort_key(cls.rep.shape), tableau_permutation(cls.rep))


def tableau_classes(cls: OrbitClass, params: ValidatedParams) -> tuple[TableauClass, ...]:
    """Partition of the standard tableaux of an orbit class into shift orbits."""
    out = []
    seen: set[Tableau] = set()
    for lam in cls.representatives:
        for t in standard_tableaux(lam):
            if t in seen:
                continue
            orbit = [t]
            cur = sigma_tableau(t, params)
            while cur != t:
                orbit.append(cur)
                cur = sigma_tableau(cur, params)
            seen.update(orbit)
            orbit.sort(key=lambda u: (shape_sort_key(u.shape), u.columns))
            out.append(TableauClass(tuple(orbit)))
    out.sort(key=tableau_class_key)
    return tuple(out)


def build_datum_rpn(params: ValidatedParams) -> CellDatum:
    """Cell datum of the fixed subalgebra: orbit classes and tableau classes.

    Each basis element is the formal sum, over the shapes of the class, of the
    triple whose tableaux are the class members living on that shape.  For
    orbits of full size p this coincides with the generic quotient of
    :func:`build_datum_r1n`; the comparison is executed by
    :func:`compare_rpn_skew`.
    """
    classes = tuple(orbit_classes(params))
    tableaux = {cls: tableau_classes(cls, params) for cls in classes}
    degrees = {}
    for cls, tab_classes in tableaux.items():
        degs = []
        for tc in tab_classes:
            member_degs = {degree_of_tableau(t, params) for t in tc.members}
            assert len(member_degs) == 1, "degree must be constant on classes"
            degs.append(member_degs.pop())
        degrees[cls] = tuple(degs)
    one = CycInt.one(params.p)
    entries = []
    for cls in classes:
        for s_cls, t_cls in itertools.product(tableaux[cls], repeat=2):
            acc: dict[BasisLabel, CycInt] = {}
            for mu in cls.representatives:
                label = BasisLabel(
                    mu, s_cls.member_with_shape(mu), t_cls.member_with_shape(mu)
                )
                acc[label] = acc.get(label, CycInt.zero(params.p)) + one
            entries.append((cls, s_cls, t_cls, FormalSum.from_dict(acc)))
    return CellDatum(
        kind="rpn",
        labels=classes,
        leq=orbit_leq_p,
        tableaux=tableaux,
        degrees=degrees,
        entries=tuple(entries),
        involution={cls: cls for cls in classes},
    )


@dataclass
class ConsistencyReport:
    """Comparison of the specialised datum against the generic quotient."""

    all_orbits_size_p: bool
    identical: bool
    notes: list[str] = field(default_factory=list)


def compare_rpn_skew(params: ValidatedParams) -> ConsistencyReport:
    """Compare :func:`build_datum_rpn` with the generic quotient route.

    When every shape orbit has size p the two must agree label-for-label and
    sum-for-sum; otherwise structural differences are reported, not asserted
    away.
    """
    rpn = build_datum_rpn(params)
    skew = quotient_skew_datum(build_datum_r1n(params), tl_shift(params))
    all_p = all(cls.size == params.p for cls in rpn.labels)
    notes = []
    if not all_p:
        notes.append(
            "orbit sizes below p present; specialised and quotient data are "
            "structurally different there"
        )
        notes.append(
            f"label counts: specialised {len(rpn.labels)}, quotient {len(skew.labels)}"
        )
        notes.append(
            f"basis counts: specialised {rpn.basis_count()}, quotient {skew.basis_count()}"
        )
        return ConsistencyReport(all_p, False, notes)
    rpn_by_rep = {cls.canonical: cls for cls in rpn.labels}
    skew_reps = {label[0] for label in skew.labels}
    if set(rpn_by_rep) != skew_reps or any(label[1] != 0 for label in skew.labels):
        notes.append("label sets differ")
        return ConsistencyReport(all_p, False, notes)
    rpn_sums = {}
    for cls, s_cls, t_cls, element in rpn.entries:
        rep = cls.canonical
        rpn_sums[
            (rep, s_cls.member_with_shape(rep).columns, t_cls.member_with_shape(rep).columns)
        ] = element
    skew_sums = {
        (label[0], s.columns, t.columns): element
        for label, s, t, element in skew.entries
    }
    if set(rpn_sums) != set(skew_sums):
        notes.append("tableau sets differ")
        return ConsistencyReport(all_p, False, notes)
    mismatches = [key for key in rpn_sums if rpn_sums[key] != skew_sums[key]]
    if mismatches:
        notes.append(f"{len(mismatches)} formal sums differ, e.g. {mismatches[0]}")
        return ConsistencyReport(all_p, False, notes)
    return ConsistencyReport(all_p, True, notes)


# ---------------------------------------------------------------------------
# the fully multiplicative toy example
# ---------------------------------------------------------------------------


@dataclass
class BabyReport:
    """Axiom-by-axiom outcome for the truncated-polynomial pair algebra."""

    m: int
    axioms: dict[str, bool] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.axioms.values())


def baby_example_check(m: int, p: int = 2) -> BabyReport:
    """Verify the skew cell axioms on R[x]/(x^m) + R[y]/(y^m) by multiplication.

    The cell poset is Z_2 x {0..m-1} ordered within each summand with higher
    powers lower (products fall into lower cells), the involution swaps the
    summands, and the basis element at (i, k) is x^k resp. y^k.  The grading
    gives x and y weight 2, so each basis element is homogeneous of twice its
    tableau degree.
    """
    if p != 2:
        raise ValueError("the toy algebra has exactly two summands")
    if m < 1:
        raise ValueError("m must be at least 1")
    report = BabyReport(m=m)
    dim = 2 * m
    labels = [(i, k) for i in range(2) for k in range(m)]

    def index(i: int, k: int) -> int:
        return i * m + k

    def unit(i: int, k: int) -> tuple[int, ...]:
        vec = [0] * dim
        vec[index(i, k)] = 1
        return tuple(vec)

    def mult(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * dim
        for i in range(2):
            for k1 in range(m):
                a = u[index(i, k1)]
                if not a:
                    continue
                for k2 in range(m):
                    b = v[index(i, k2)]
                    if b and k1 + k2 < m:
                        out[index(i, k1 + k2)] += a * b
        return tuple(out)

    def leq(lab1, lab2) -> bool:
        return lab1[0] == lab2[0] and lab1[1] >= lab2[1]

    def star(u: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(u[m:] + u[:m])

    basis = {lab: unit(*lab) for lab in labels}

    # (C1) homogeneity: the element at (i, k) has weight 2k = deg(S) + deg(T),
    # and multiplication adds weights.
    c1 = True
    for lab1, lab2 in itertools.product(labels, repeat=2):
        prod = mult(basis[lab1], basis[lab2])
        for lab3 in labels:
            if prod[index(*lab3)] and 2 * lab3[1] != 2 * lab1[1] + 2 * lab2[1]:
                c1 = False
                report.violations.append(f"C1: {lab1} * {lab2} hits {lab3}")
    report.axioms["C1"] = c1

    # (C2) the images form a basis of the 2m-dimensional algebra.
    report.axioms["C2"] = len({basis[lab] for lab in labels}) == dim

    # (C3) left multiplication is triangular: a * C^lab = r_a(lab) * C^lab
    # plus lower cells, with the coefficient independent of the (unique)
    # right tableau.
    c3 = True
    for lab in labels:
        lower = [other for other in labels if leq(other, lab) and other != lab]
        for a_lab in labels:
            prod = list(mult(basis[a_lab], basis[lab]))
            prod[index(*lab)] = 0  # remove the same-cell component
            for other in labels:
                if prod[index(*other)] and other not in lower:
                    c3 = False
                    report.violations.append(
                        f"C3: {a_lab} * C^{lab} escapes to {other}"
                    )
    report.axioms["C3"] = c3

    # (C4) the swap is an anti-automorphism matching the poset involution.
    c4 = True
    for lab1, lab2 in itertools.product(labels, repeat=2):
        if star(mult(basis[lab1], basis[lab2])) != mult(
            star(basis[lab2]), star(basis[lab1])
        ):
            c4 = False
            report.violations.append(f"C4: swap not an anti-automorphism at {lab1},{lab2}")
    for i, k in labels:
        if star(basis[(i, k)]) != basis[((i + 1) % 2, k)]:
            c4 = False
            report.violations.append(f"C4: swap misses the involution at {(i, k)}")
    report.axioms["C4"] = c4
    return report
