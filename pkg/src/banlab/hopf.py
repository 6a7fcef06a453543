"""Algebras, coalgebras and bialgebras via structure constants.

Axiom checkers work on sparse structure constants (all the constructors
here produce matrices with very few nonzeros per column) and report every
axiom with a pass/fail flag and a witness basis tuple on failure, plus the
certified norm of each structure map.

Constructors: group bialgebras l1(Gamma), grading (co)algebras on groups
and on integer windows, Tate coalgebras of truncated power series with a
radius parameter, chains of Tate coalgebras along a shrinking radius
schedule, and function bialgebras on finite groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapExceeded, ScheduleNotDecreasing, WindowNotGroup
from .groups import FiniteGroup
from .ind import IndObject, chain as ind_chain
from .linalg import F0, F1, Mat, frac, vec
from .nspace import MAX, SUM, BoundedMap, DiagSpace, line
from .scalar import NormValue, ValuedField
from .tensor import tensor

TATE_DEGREE_CAP = 12
TATE_VARS_CAP = 3
GROUP_ORDER_CAP = 8
DAGGER_LENGTH_CAP = 5


@dataclass(frozen=True)
class AlgebraData:
    carrier: DiagSpace
    mult: BoundedMap
    unit: BoundedMap


@dataclass(frozen=True)
class CoalgebraData:
    carrier: DiagSpace
    comult: BoundedMap
    counit: BoundedMap


@dataclass(frozen=True)
class BialgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData

    @property
    def carrier(self) -> DiagSpace:
        return self.algebra.carrier

    @property
    def mult(self) -> BoundedMap:
        return self.algebra.mult

    @property
    def unit(self) -> BoundedMap:
        return self.algebra.unit

    @property
    def comult(self) -> BoundedMap:
        return self.coalgebra.comult

    @property
    def counit(self) -> BoundedMap:
        return self.coalgebra.counit


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    witness: tuple | None = None

    def __repr__(self):
        return f"{self.axiom}: {'pass' if self.passed else f'FAIL at {self.witness}'}"


@dataclass
class StructureReport:
    kind: str
    axioms: list[AxiomResult]
    norms: dict[str, tuple[NormValue, bool]]

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.axioms)

    def failures(self) -> list[AxiomResult]:
        return [a for a in self.axioms if not a.passed]

    def axiom(self, name: str) -> AxiomResult:
        return next(a for a in self.axioms if a.axiom == name)


# -- sparse structure-constant helpers ---------------------------------------

Cols = list[dict[int, Fraction]]


def _cols(matrix: Mat, ncols: int) -> Cols:
    out: Cols = [dict() for _ in range(ncols)]
    for r, row in enumerate(matrix):
        for c, x in enumerate(row):
            if x:
                out[c][r] = x
    return out


def _apply_cols(cols: Cols, column: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for c, x in column.items():
        for r, y in cols[c].items():
            v = out.get(r, F0) + x * y
            if v:
                out[r] = v
            else:
                out.pop(r, None)
    return out


def _sparse_eq(a: dict[int, Fraction], b: dict[int, Fraction]) -> bool:
    return a == b


# -- axiom checks -------------------------------------------------------------


def _decode(index: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def check_algebra(alg: AlgebraData) -> StructureReport:
    n = alg.carrier.dim
    mult = _cols(alg.mult.matrix, n * n)
    unit_vec = {r: alg.unit.matrix[r][0] for r in range(n) if alg.unit.matrix[r][0]}
    axioms = []

    witness = None
    for i, j, k in itertools.product(range(n), repeat=3):
        ij = _apply_cols(mult, {i * n + j: F1})
        left = _apply_cols(mult, {r * n + k: x for r, x in ij.items()})
        jk = _apply_cols(mult, {j * n + k: F1})
        right = _apply_cols(mult, {i * n + r: x for r, x in jk.items()})
        if not _sparse_eq(left, right):
            witness = (i, j, k)
            break
    axioms.append(AxiomResult("associativity", witness is None, witness))

    witness = None
    for j in range(n):
        image = _apply_cols(mult, {r * n + j: x for r, x in unit_vec.items()})
        if image != {j: F1}:
            witness = (j,)
            break
    axioms.append(AxiomResult("unit_left", witness is None, witness))

    witness = None
    for i in range(n):
        image = _apply_cols(mult, {i * n + r: x for r, x in unit_vec.items()})
        if image != {i: F1}:
            witness = (i,)
            break
    axioms.append(AxiomResult("unit_right", witness is None, witness))

    norms = {
        "mult": (alg.mult.opnorm, alg.mult.opnorm_exact),
        "unit": (alg.unit.opnorm, alg.unit.opnorm_exact),
    }
    return StructureReport("algebra", axioms, norms)


def check_coalgebra(co: CoalgebraData) -> StructureReport:
    n = co.carrier.dim
    comult = _cols(co.comult.matrix, n)
    counit = [co.counit.matrix[0][c] for c in range(n)]
    axioms = []

    witness = None
    for i in range(n):
        delta_i = comult[i]
        left: dict[int, Fraction] = {}
        right: dict[int, Fraction] = {}
        for rc, x in delta_i.items():
            a, b = divmod(rc, n)
            for rc2, y in comult[a].items():
                key = rc2 * n + b
                left[key] = left.get(key, F0) + x * y
            for rc2, y in comult[b].items():
                key = a * n * n + rc2
                right[key] = right.get(key, F0) + x * y
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            witness = (i,)
            break
    axioms.append(AxiomResult("coassociativity", witness is None, witness))

    witness = None
    for i in range(n):
        image: dict[int, Fraction] = {}
        for rc, x in comult[i].items():
            a, b = divmod(rc, n)
            if counit[a]:
                image[b] = image.get(b, F0) + x * counit[a]
        image = {k: v for k, v in image.items() if v}
        if image != {i: F1}:
            witness = (i,)
            break
    axioms.append(AxiomResult("counit_left", witness is None, witness))

    witness = None
    for i in range(n):
        image = {}
        for rc, x in comult[i].items():
            a, b = divmod(rc, n)
            if counit[b]:
                image[a] = image.get(a, F0) + x * counit[b]
        image = {k: v for k, v in image.items() if v}
        if image != {i: F1}:
            witness = (i,)
            break
    axioms.append(AxiomResult("counit_right", witness is None, witness))

    norms = {
        "comult": (co.comult.opnorm, co.comult.opnorm_exact),
        "counit": (co.counit.opnorm, co.counit.opnorm_exact),
    }
    return StructureReport("coalgebra", axioms, norms)


def check_bialgebra(bi: BialgebraData) -> StructureReport:
    n = bi.carrier.dim
    alg_report = check_algebra(bi.algebra)
    co_report = check_coalgebra(bi.coalgebra)
    mult = _cols(bi.mult.matrix, n * n)
    comult = _cols(bi.comult.matrix, n)
    counit = [bi.counit.matrix[0][c] for c in range(n)]
    unit_vec = {r: bi.unit.matrix[r][0] for r in range(n) if bi.unit.matrix[r][0]}
    axioms = list(alg_report.axioms) + list(co_report.axioms)

    # comult is an algebra morphism: Delta(xy) = Delta(x) Delta(y)
    witness = None
    for i, j in itertools.product(range(n), repeat=2):
        prod = _apply_cols(mult, {i * n + j: F1})
        lhs: dict[int, Fraction] = {}
        for r, x in prod.items():
            for rc, y in comult[r].items():
                lhs[rc] = lhs.get(rc, F0) + x * y
        lhs = {k: v for k, v in lhs.items() if v}
        rhs: dict[int, Fraction] = {}
        for rc1, x in comult[i].items():
            a, b = divmod(rc1, n)
            for rc2, y in comult[j].items():
                c, d = divmod(rc2, n)
                for r1, z1 in _apply_cols(mult, {a * n + c: F1}).items():
                    for r2, z2 in _apply_cols(mult, {b * n + d: F1}).items():
                        key = r1 * n + r2
                        rhs[key] = rhs.get(key, F0) + x * y * z1 * z2
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            witness = (i, j)
            break
    axioms.append(AxiomResult("comult_multiplicative", witness is None, witness))

    witness = None
    for i, j in itertools.product(range(n), repeat=2):
        prod = _apply_cols(mult, {i * n + j: F1})
        lhs_val = sum((x * counit[r] for r, x in prod.items()), F0)
        if lhs_val != counit[i] * counit[j]:
            witness = (i, j)
            break
    axioms.append(AxiomResult("counit_multiplicative", witness is None, witness))

    comult_unit: dict[int, Fraction] = {}
    for r, x in unit_vec.items():
        for rc, y in comult[r].items():
            comult_unit[rc] = comult_unit.get(rc, F0) + x * y
    unit_tensor = {}
    for r1, x in unit_vec.items():
        for r2, y in unit_vec.items():
            unit_tensor[r1 * n + r2] = x * y
    comult_unit = {k: v for k, v in comult_unit.items() if v}
    unit_tensor = {k: v for k, v in unit_tensor.items() if v}
    if comult_unit == unit_tensor:
        axioms.append(AxiomResult("comult_unit", True))
    else:
        bad = min(set(comult_unit) ^ set(unit_tensor) | {k for k in comult_unit if unit_tensor.get(k) != comult_unit[k]})
        axioms.append(AxiomResult("comult_unit", False, divmod(bad, n)))
    counit_unit = sum((x * counit[r] for r, x in unit_vec.items()), F0)
    axioms.append(AxiomResult("counit_unit", counit_unit == F1, None if counit_unit == F1 else (str(counit_unit),)))

    norms = dict(alg_report.norms)
    norms.update(co_report.norms)
    return StructureReport("bialgebra", axioms, norms)


# -- constructors -------------------------------------------------------------


def _group_carrier(field: ValuedField, group: FiniteGroup, flavor: str, prefix: str = "t^") -> DiagSpace:
    labels = tuple(f"{prefix}{g}" for g in group.elements)
    weights = tuple(field.one_norm() for _ in range(group.order))
    return DiagSpace(field, labels, weights, flavor)


def group_bialgebra(group: FiniteGroup, field: ValuedField) -> BialgebraData:
    """The Banach group algebra l1(Gamma) with its grouplike bialgebra structure.

    mult t^g t^h = t^(gh), unit t^1, comult t^g -> t^g (x) t^g, counit 1.
    All structure-map norms are exactly 1 on the unit-weight carrier.
    """
    if group.order > GROUP_ORDER_CAP:
        raise CapExceeded(f"group order {group.order} exceeds cap {GROUP_ORDER_CAP}")
    n = group.order
    carrier = _group_carrier(field, group, SUM)
    sq = tensor(carrier, carrier)
    mult_rows = [[F0] * (n * n) for _ in range(n)]
    for g in range(n):
        for h in range(n):
            mult_rows[group.mul(g, h)][g * n + h] = F1
    unit_rows = [[F1 if r == group.identity else F0] for r in range(n)]
    comult_rows = [[F0] * n for _ in range(n * n)]
    for g in range(n):
        comult_rows[g * n + g][g] = F1
    counit_rows = [[F1] * n]
    alg = AlgebraData(
        carrier,
        BoundedMap.create(sq, carrier, mult_rows),
        BoundedMap.create(line(field), carrier, unit_rows),
    )
    co = CoalgebraData(
        carrier,
        BoundedMap.create(carrier, sq, comult_rows),
        BoundedMap.create(carrier, line(field), counit_rows),
    )
    return BialgebraData(alg, co)


def grading_bialgebra(group_or_window, field: ValuedField, require_bialgebra: bool = False):
    """Grading structure: a full bialgebra on a finite group, or the
    grouplike coalgebra on an integer window [-N, N] (whose multiplication
    is deliberately omitted: the window is not closed under addition, and
    truncating the overflow would silently break associativity).
    """
    if isinstance(group_or_window, FiniteGroup):
        return group_bialgebra(group_or_window, field)
    window = list(group_or_window)
    if require_bialgebra:
        raise WindowNotGroup("a degree window carries no multiplication; only the coalgebra exists")
    if not window:
        raise WindowNotGroup("empty degree window")
    return window_coalgebra(window, field)


def window_coalgebra(degrees: Sequence[int], field: ValuedField) -> CoalgebraData:
    degrees = list(degrees)
    labels = tuple(f"t^{d}" for d in degrees)
    weights = tuple(field.one_norm() for _ in degrees)
    carrier = DiagSpace(field, labels, weights, SUM)
    n = len(degrees)
    sq = tensor(carrier, carrier)
    comult_rows = [[F0] * n for _ in range(n * n)]
    for i in range(n):
        comult_rows[i * n + i][i] = F1
    counit_rows = [[F1] * n]
    return CoalgebraData(
        carrier,
        BoundedMap.create(carrier, sq, comult_rows),
        BoundedMap.create(carrier, line(field), counit_rows),
    )


def function_bialgebra(group: FiniteGroup, field: ValuedField) -> BialgebraData:
    """Functions on a finite group with the sup norm.

    Pointwise multiplication with all-ones unit; comultiplication splits
    along the group law, Delta(d_g) = sum over g'g''=g of d_g' (x) d_g'';
    counit is evaluation at the identity.
    """
    if group.order > GROUP_ORDER_CAP:
        raise CapExceeded(f"group order {group.order} exceeds cap {GROUP_ORDER_CAP}")
    n = group.order
    carrier = _group_carrier(field, group, MAX, prefix="d_")
    sq = tensor(carrier, carrier)
    mult_rows = [[F0] * (n * n) for _ in range(n)]
    for g in range(n):
        mult_rows[g][g * n + g] = F1
    unit_rows = [[F1] for _ in range(n)]
    comult_rows = [[F0] * n for _ in range(n * n)]
    for g1 in range(n):
        for g2 in range(n):
            comult_rows[g1 * n + g2][group.mul(g1, g2)] = F1
    counit_rows = [[F1 if g == group.identity else F0 for g in range(n)]]
    alg = AlgebraData(
        carrier,
        BoundedMap.create(sq, carrier, mult_rows),
        BoundedMap.create(line(field), carrier, unit_rows),
    )
    co = CoalgebraData(
        carrier,
        BoundedMap.create(carrier, sq, comult_rows),
        BoundedMap.create(carrier, line(field), counit_rows),
    )
    return BialgebraData(alg, co)


# -- Tate coalgebras ----------------------------------------------------------


def monomials(n_vars: int, degree_cap: int) -> list[tuple[int, ...]]:
    out = [m for m in itertools.product(range(degree_cap + 1), repeat=n_vars) if sum(m) <= degree_cap]
    out.sort(key=lambda m: (sum(m), m))
    return out


def tate_carrier(field: ValuedField, n_vars: int, degree_cap: int, radii: Sequence[Fraction]) -> DiagSpace:
    mons = monomials(n_vars, degree_cap)
    labels = tuple("t^" + ",".join(map(str, m)) if n_vars > 1 else f"t^{m[0]}" for m in mons)
    weights = []
    for m in mons:
        w = field.one_norm()
        for r, e in zip(radii, m):
            w = w * field.norm_value(r) ** e
        weights.append(w)
    return DiagSpace(field, labels, tuple(weights), SUM)


@dataclass
class TateReport:
    coalgebra: CoalgebraData
    radius: tuple[Fraction, ...]
    degree_cap: int
    counit_norm: NormValue
    counit_bounded: bool
    comult_norm: NormValue
    comult_bounded: bool
    contracted_comult_norm: NormValue


def tate_coalgebra(n_vars: int, degree_cap: int, radius, field: ValuedField) -> TateReport:
    """Truncated strictly convergent power series with grouplike comultiplication.

    The report records the boundedness phase: the counit is a contraction
    iff the radius is >= 1, the same-radius comultiplication iff <= 1, and
    the comultiplication sourced at the squared radius has norm exactly 1.
    """
    if n_vars < 1 or n_vars > TATE_VARS_CAP:
        raise CapExceeded(f"n_vars {n_vars} outside 1..{TATE_VARS_CAP}")
    if degree_cap > TATE_DEGREE_CAP:
        raise CapExceeded(f"degree cap {degree_cap} > {TATE_DEGREE_CAP}")
    radii = tuple(frac(r) for r in (radius if isinstance(radius, (list, tuple)) else [radius] * n_vars))
    if any(r <= 0 for r in radii):
        raise ValueError("radii must be positive")
    carrier = tate_carrier(field, n_vars, degree_cap, radii)
    mons = monomials(n_vars, degree_cap)
    n = len(mons)
    sq = tensor(carrier, carrier)
    comult_rows = [[F0] * n for _ in range(n * n)]
    for i in range(n):
        comult_rows[i * n + i][i] = F1
    counit_rows = [[F1] * n]
    co = CoalgebraData(
        carrier,
        BoundedMap.create(carrier, sq, comult_rows),
        BoundedMap.create(carrier, line(field), counit_rows),
    )
    squared = tate_carrier(field, n_vars, degree_cap, tuple(r * r for r in radii))
    contracted = BoundedMap.create(squared, sq, comult_rows)
    one = field.one_norm()
    return TateReport(
        coalgebra=co,
        radius=radii,
        degree_cap=degree_cap,
        counit_norm=co.counit.opnorm,
        counit_bounded=bool(co.counit.opnorm <= one),
        comult_norm=co.comult.opnorm,
        comult_bounded=bool(co.comult.opnorm <= one),
        contracted_comult_norm=contracted.opnorm,
    )


@dataclass
class DaggerChain:
    schedule: tuple[Fraction, ...]
    stages: list[TateReport]
    ind_object: IndObject
    transition_norms: list[NormValue]
    comult_stage_norms: list[NormValue]


def dagger_chain(n_vars: int, degree_cap: int, schedule: Sequence, field: ValuedField) -> DaggerChain:
    """Chain of Tate carriers along a strictly decreasing radius schedule.

    Inclusion transitions have norm exactly 1; the comultiplication is
    realized stagewise as the norm-1 maps from the squared-radius carrier
    into the tensor square at the original radius.
    """
    sched = tuple(frac(r) for r in schedule)
    if len(sched) < 1 or len(sched) > DAGGER_LENGTH_CAP:
        raise CapExceeded(f"schedule length {len(sched)} outside 1..{DAGGER_LENGTH_CAP}")
    if any(b >= a for a, b in zip(sched, sched[1:])):
        raise ScheduleNotDecreasing(f"schedule {sched} is not strictly decreasing")
    if any(r <= 0 for r in sched):
        raise ValueError("radii must be positive")
    stages = [tate_coalgebra(n_vars, degree_cap, r, field) for r in sched]
    spaces = [st.coalgebra.carrier for st in stages]
    from .linalg import identity as ident

    maps = [
        BoundedMap.create(spaces[i], spaces[i + 1], ident(spaces[i].dim))
        for i in range(len(spaces) - 1)
    ]
    obj = ind_chain(spaces, maps)
    return DaggerChain(
        schedule=sched,
        stages=stages,
        ind_object=obj,
        transition_norms=[m.opnorm for m in maps],
        comult_stage_norms=[st.contracted_comult_norm for st in stages],
    )


# -- fault injection ----------------------------------------------------------


def mutate_bialgebra(bi: BialgebraData, fault: str) -> BialgebraData:
    """Return a defective copy, for fault-injection scenarios."""
    n = bi.carrier.dim
    if n < 2:
        raise ValueError("mutation needs dimension >= 2")
    if fault == "comult_sign":
        rows = [list(r) for r in bi.comult.matrix]
        target = next(
            (r, c) for r in range(len(rows)) for c in range(n) if rows[r][c]
        )
        rows[target[0]][target[1]] = -rows[target[0]][target[1]]
        co = CoalgebraData(bi.carrier, BoundedMap.create(bi.carrier, bi.comult.codomain, rows), bi.counit)
        return BialgebraData(bi.algebra, co)
    if fault == "counit_value":
        rows = [list(bi.counit.matrix[0])]
        rows[0][n - 1] = rows[0][n - 1] + F1
        co = CoalgebraData(bi.carrier, bi.comult, BoundedMap.create(bi.carrier, bi.counit.codomain, rows))
        return BialgebraData(bi.algebra, co)
    if fault == "mult_entry":
        rows = [list(r) for r in bi.mult.matrix]
        c = n + 1 if n * n > n + 1 else 0
        r_hot = next(r for r in range(n) if rows[r][c])
        rows[r_hot][c] = F0
        rows[(r_hot + 1) % n][c] = F1
        alg = AlgebraData(bi.carrier, BoundedMap.create(bi.mult.domain, bi.carrier, rows), bi.unit)
        return BialgebraData(alg, bi.coalgebra)
    raise ValueError(f"unknown fault {fault!r}")
