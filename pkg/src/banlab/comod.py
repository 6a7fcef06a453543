"""Modules, comodules, and the executable category equivalences.

Covers four dictionaries, each as an explicit pair of constructions with
exact round trips:

* graded spaces over an integer window <-> comodules over the grouplike
  window coalgebra (coaction m_n -> t^n (x) m_n; inverse extracts the
  degree projections and reassembles the summands);
* group representations <-> modules over the Banach group algebra, with a
  boundedness report (sup of the operator norms, isometric flag);
* duality: transposing structure constants through an invertible pairing
  swaps algebras with coalgebras and modules with comodules;
* the two adjunctions around the forgetful functor on representations
  (free coproduct on the left, functions on the group on the right),
  verified as mutually inverse bijections on full hom bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegeneratePairing,
    DimensionMismatch,
    NotAHomomorphism,
    NotGrouplikeCoalgebra,
    ProjectionsDoNotResolve,
)
from .groups import FiniteGroup
from .hopf import (
    AlgebraData,
    AxiomResult,
    BialgebraData,
    CoalgebraData,
    StructureReport,
    group_bialgebra,
    window_coalgebra,
)
from .linalg import (
    F0,
    F1,
    Mat,
    det,
    identity,
    invert,
    kron,
    mat,
    mat_mul,
    mat_vec,
    nullspace,
    transpose,
    vec,
)
from .nspace import SUM, BoundedMap, DiagSpace, contracting_coproduct, line
from .scalar import NormValue, ValuedField
from .tensor import tensor


@dataclass(frozen=True)
class ModuleData:
    algebra: AlgebraData
    carrier: DiagSpace
    action: BoundedMap  # A (x) M -> M


@dataclass(frozen=True)
class ComoduleData:
    coalgebra: CoalgebraData
    carrier: DiagSpace
    coaction: BoundedMap  # M -> B (x) M


def _sparse_cols(matrix: Mat, ncols: int) -> list[dict[int, Fraction]]:
    cols: list[dict[int, Fraction]] = [dict() for _ in range(ncols)]
    for r, row in enumerate(matrix):
        for c, x in enumerate(row):
            if x:
                cols[c][r] = x
    return cols


def check_module(m: ModuleData) -> StructureReport:
    a_dim = m.algebra.carrier.dim
    m_dim = m.carrier.dim
    act = _sparse_cols(m.action.matrix, a_dim * m_dim)
    mult = _sparse_cols(m.algebra.mult.matrix, a_dim * a_dim)
    unit_vec = {r: m.algebra.unit.matrix[r][0] for r in range(a_dim) if m.algebra.unit.matrix[r][0]}
    axioms = []

    witness = None
    for a in range(a_dim):
        for b in range(a_dim):
            ab = mult[a * a_dim + b]
            for j in range(m_dim):
                lhs: dict[int, Fraction] = {}
                for r, x in ab.items():
                    for rr, y in act[r * m_dim + j].items():
                        v = lhs.get(rr, F0) + x * y
                        if v:
                            lhs[rr] = v
                        else:
                            lhs.pop(rr, None)
                rhs: dict[int, Fraction] = {}
                for r, x in act[b * m_dim + j].items():
                    for rr, y in act[a * m_dim + r].items():
                        v = rhs.get(rr, F0) + x * y
                        if v:
                            rhs[rr] = v
                        else:
                            rhs.pop(rr, None)
                if lhs != rhs:
                    witness = (a, b, j)
                    break
            if witness:
                break
        if witness:
            break
    axioms.append(AxiomResult("action_associativity", witness is None, witness))

    witness = None
    for j in range(m_dim):
        image: dict[int, Fraction] = {}
        for r, x in unit_vec.items():
            for rr, y in act[r * m_dim + j].items():
                v = image.get(rr, F0) + x * y
                if v:
                    image[rr] = v
                else:
                    image.pop(rr, None)
        if image != {j: F1}:
            witness = (j,)
            break
    axioms.append(AxiomResult("action_unit", witness is None, witness))

    return StructureReport("module", axioms, {"action": (m.action.opnorm, m.action.opnorm_exact)})


def check_comodule(c: ComoduleData) -> StructureReport:
    b_dim = c.coalgebra.carrier.dim
    m_dim = c.carrier.dim
    coact = _sparse_cols(c.coaction.matrix, m_dim)
    comult = _sparse_cols(c.coalgebra.comult.matrix, b_dim)
    counit = [c.coalgebra.counit.matrix[0][i] for i in range(b_dim)]
    axioms = []

    witness = None
    for j in range(m_dim):
        lhs: dict[int, Fraction] = {}
        rhs: dict[int, Fraction] = {}
        for idx, x in coact[j].items():
            d, r = divmod(idx, m_dim)
            for dd, y in comult[d].items():
                key = dd * m_dim + r  # (d1, d2, r) flattened as ((d1*b + d2)*m + r)
                lhs[key] = lhs.get(key, F0) + x * y
            for idx2, y in coact[r].items():
                d2, r2 = divmod(idx2, m_dim)
                key = (d * b_dim + d2) * m_dim + r2
                rhs[key] = rhs.get(key, F0) + x * y
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            witness = (j,)
            break
    axioms.append(AxiomResult("coaction_coassociativity", witness is None, witness))

    witness = None
    for j in range(m_dim):
        image: dict[int, Fraction] = {}
        for idx, x in coact[j].items():
            d, r = divmod(idx, m_dim)
            if counit[d]:
                v = image.get(r, F0) + x * counit[d]
                if v:
                    image[r] = v
                else:
                    image.pop(r, None)
        if image != {j: F1}:
            witness = (j,)
            break
    axioms.append(AxiomResult("coaction_counit", witness is None, witness))

    return StructureReport("comodule", axioms, {"coaction": (c.coaction.opnorm, c.coaction.opnorm_exact)})


def _first_mismatch(a: Mat, b: Mat, dims) -> tuple | None:
    for c in range(len(a[0]) if a else 0):
        for r in range(len(a)):
            if a[r][c] != b[r][c]:
                return _decode_col(c, dims)
    return None


def _decode_col(index: int, dims) -> tuple:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


# -- graded spaces <-> comodules over the grading coalgebra -------------------


@dataclass(frozen=True)
class GradedSpace:
    degrees: tuple[int, ...]
    summands: tuple[DiagSpace, ...]

    def __post_init__(self):
        if len(self.degrees) != len(self.summands):
            raise DimensionMismatch("one summand per degree")
        if len(set(self.degrees)) != len(self.degrees):
            raise DimensionMismatch("duplicate degrees")

    @property
    def field(self) -> ValuedField:
        return self.summands[0].field

    def total(self) -> DiagSpace:
        """Contracting coproduct of the summands, degree-tagged labels."""
        labels = tuple(
            f"{d}|{lab}" for d, s in zip(self.degrees, self.summands) for lab in s.labels
        )
        weights = tuple(w for s in self.summands for w in s.weights)
        flavor = SUM
        return DiagSpace(self.field, labels, weights, flavor)

    def dim(self) -> int:
        return sum(s.dim for s in self.summands)


def graded_to_comodule(g: GradedSpace, window: Sequence[int] | None = None) -> ComoduleData:
    """Coaction m_n -> t^n (x) m_n over the grouplike window coalgebra."""
    degrees = list(window) if window is not None else sorted(g.degrees)
    missing = [d for d in g.degrees if d not in degrees]
    if missing:
        raise DimensionMismatch(f"degrees {missing} outside the window")
    co = window_coalgebra(degrees, g.field)
    total = g.total()
    b_dim = co.carrier.dim
    m_dim = total.dim
    rows = [[F0] * m_dim for _ in range(b_dim * m_dim)]
    col = 0
    for d, s in zip(g.degrees, g.summands):
        di = degrees.index(d)
        for _ in range(s.dim):
            rows[di * m_dim + col][col] = F1
            col += 1
    coaction = BoundedMap.create(total, tensor(co.carrier, total), rows)
    return ComoduleData(co, total, coaction)


def _is_grouplike(co: CoalgebraData) -> bool:
    n = co.carrier.dim
    for i in range(n):
        col = tuple(co.comult.matrix[r][i] for r in range(n * n))
        expected = tuple(F1 if r == i * n + i else F0 for r in range(n * n))
        if col != expected:
            return False
        if co.counit.matrix[0][i] != F1:
            return False
    return True


def comodule_to_graded(c: ComoduleData) -> GradedSpace:
    """Extract the degree projections and reassemble the summands.

    The projections pi_d = (dual basis of t^d (x) id) o coaction must be
    idempotent, mutually orthogonal, sum to the identity, and be aligned
    with the coordinates of the carrier (each column a unit vector or
    zero); then the summands are read off the coordinate blocks and the
    round trip with graded_to_comodule is the identity on the nose.
    """
    if not _is_grouplike(c.coalgebra):
        raise NotGrouplikeCoalgebra("comodule_to_graded needs a grouplike basis")
    b_dim = c.coalgebra.carrier.dim
    m_dim = c.carrier.dim
    try:
        degrees_all = [int(lab.split("^")[1]) for lab in c.coalgebra.carrier.labels]
    except (IndexError, ValueError):
        raise NotGrouplikeCoalgebra(
            "grading extraction needs a coalgebra over integer degrees (labels t^n)"
        ) from None
    projections = []
    for d in range(b_dim):
        p = tuple(
            tuple(c.coaction.matrix[d * m_dim + r][col] for col in range(m_dim))
            for r in range(m_dim)
        )
        projections.append(p)
    total = None
    for d, p in enumerate(projections):
        if mat_mul(p, p) != p:
            raise ProjectionsDoNotResolve(f"projection at degree {degrees_all[d]} is not idempotent")
        total = p if total is None else _mat_add(total, p)
    for d1 in range(b_dim):
        for d2 in range(b_dim):
            if d1 != d2:
                prod = mat_mul(projections[d1], projections[d2])
                if any(any(row) for row in prod):
                    raise ProjectionsDoNotResolve(
                        f"projections at degrees {degrees_all[d1]} and {degrees_all[d2]} overlap"
                    )
    if total != identity(m_dim):
        raise ProjectionsDoNotResolve("projections do not sum to the identity")
    degrees = []
    summands = []
    for d, p in enumerate(projections):
        block_cols = []
        for colidx in range(m_dim):
            col = tuple(p[r][colidx] for r in range(m_dim))
            if any(col):
                if col != tuple(F1 if r == colidx else F0 for r in range(m_dim)):
                    raise ProjectionsDoNotResolve(
                        "projection is not aligned with the carrier coordinates"
                    )
                block_cols.append(colidx)
        if not block_cols:
            continue
        labels = tuple(_strip_degree_tag(c.carrier.labels[i]) for i in block_cols)
        weights = tuple(c.carrier.weights[i] for i in block_cols)
        summands.append(DiagSpace(c.carrier.field, labels, weights, c.carrier.flavor))
        degrees.append(degrees_all[d])
    return GradedSpace(tuple(degrees), tuple(summands))


def _strip_degree_tag(label: str) -> str:
    return label.split("|", 1)[1] if "|" in label else label


def _mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def graded_tensor(g1: GradedSpace, g2: GradedSpace) -> GradedSpace:
    """Degreewise tensor: (G (x) G')(N) = coprod over n+n'=N of G(n) (x) G'(n')."""
    sums: dict[int, list[DiagSpace]] = {}
    for d1, s1 in zip(g1.degrees, g1.summands):
        for d2, s2 in zip(g2.degrees, g2.summands):
            sums.setdefault(d1 + d2, []).append(tensor(s1, s2))
    degrees = sorted(sums)
    summands = []
    for d in degrees:
        pieces = sums[d]
        if len(pieces) == 1:
            summands.append(pieces[0])
        else:
            total, _ = contracting_coproduct(pieces, g1.field)
            summands.append(total)
    return GradedSpace(tuple(degrees), tuple(summands))


@dataclass
class MonoidalCompatReport:
    overflow_skipped: bool
    compatible: bool | None
    window: tuple[int, ...]


def graded_monoidal_compat(g1: GradedSpace, g2: GradedSpace, window: Sequence[int]) -> MonoidalCompatReport:
    """Tensor-of-graded vs comodule-tensor coaction through the window's addition.

    Exact check when every degree sum stays inside the window; otherwise
    the check is skipped with the overflow flag set (truncating would
    silently break coassociativity).  The tensor total groups coordinates
    by total degree, so the comparison goes through the explicit index
    bijection with the (i1, i2)-major comodule-tensor coordinates.
    """
    window = list(window)
    sums = {d1 + d2 for d1 in g1.degrees for d2 in g2.degrees}
    if not sums <= set(window):
        return MonoidalCompatReport(True, None, tuple(window))
    gt = graded_tensor(g1, g2)
    direct = graded_to_comodule(gt, window)

    c1 = graded_to_comodule(g1, window)
    c2 = graded_to_comodule(g2, window)
    m1 = c1.carrier.dim
    m2 = c2.carrier.dim
    big = m1 * m2

    # index bijection: (i1, i2) in the comodule-tensor order -> flat index of
    # the degree-grouped tensor total (replaying graded_tensor's ordering)
    offs1 = [0]
    for s in g1.summands:
        offs1.append(offs1[-1] + s.dim)
    offs2 = [0]
    for s in g2.summands:
        offs2.append(offs2[-1] + s.dim)
    pieces: dict[int, list[tuple[int, int]]] = {}
    for b1 in range(len(g1.degrees)):
        for b2 in range(len(g2.degrees)):
            pieces.setdefault(g1.degrees[b1] + g2.degrees[b2], []).append((b1, b2))
    perm = [0] * big
    flat = 0
    for d in sorted(pieces):
        for b1, b2 in pieces[d]:
            for a in range(g1.summands[b1].dim):
                for bidx in range(g2.summands[b2].dim):
                    i1 = offs1[b1] + a
                    i2 = offs2[b2] + bidx
                    perm[i1 * m2 + i2] = flat
                    flat += 1

    degrees = list(window)
    composite = [[F0] * big for _ in range(len(degrees) * big)]
    for col1 in range(m1):
        for col2 in range(m2):
            col = perm[col1 * m2 + col2]
            for r1 in range(len(degrees) * m1):
                x = c1.coaction.matrix[r1][col1]
                if not x:
                    continue
                d1, i1 = divmod(r1, m1)
                for r2 in range(len(degrees) * m2):
                    y = c2.coaction.matrix[r2][col2]
                    if not y:
                        continue
                    d2, i2 = divmod(r2, m2)
                    dsum = degrees[d1] + degrees[d2]
                    drow = degrees.index(dsum)
                    row = drow * big + perm[i1 * m2 + i2]
                    composite[row][col] += x * y
    compatible = mat(composite) == direct.coaction.matrix
    return MonoidalCompatReport(False, compatible, tuple(window))


# -- representations <-> modules over the group algebra ----------------------


@dataclass
class RepReport:
    sup_norm: NormValue
    sup_norm_exact: bool
    isometric: bool


def rep_to_module(
    group: FiniteGroup,
    matrices: Sequence[Mat],
    field: ValuedField,
    carrier: DiagSpace | None = None,
) -> ModuleData:
    """Module over the Banach group algebra from a matrix representation."""
    mats = [mat(m) for m in matrices]
    if len(mats) != group.order:
        raise NotAHomomorphism("one matrix per group element")
    dim = len(mats[0]) if mats else 0
    if carrier is None:
        from .nspace import standard_space

        carrier = standard_space(field, dim, SUM, label="v")
    if mats[group.identity] != identity(dim):
        raise NotAHomomorphism("identity element must act as the identity matrix")
    for g in range(group.order):
        for h in range(group.order):
            if mat_mul(mats[g], mats[h]) != mats[group.mul(g, h)]:
                raise NotAHomomorphism(f"pi({group.elements[g]}) pi({group.elements[h]}) != pi(product)")
    bi = group_bialgebra(group, field)
    n = group.order
    rows = [[F0] * (n * dim) for _ in range(dim)]
    for g in range(n):
        for j in range(dim):
            col = g * dim + j
            for r in range(dim):
                rows[r][col] = mats[g][r][j]
    action = BoundedMap.create(tensor(bi.carrier, carrier), carrier, rows)
    return ModuleData(bi.algebra, carrier, action)


def module_to_rep(m: ModuleData) -> list[Mat]:
    """Extract pi(g) = action(t^g (x) -)."""
    a_dim = m.algebra.carrier.dim
    dim = m.carrier.dim
    out = []
    for g in range(a_dim):
        out.append(
            tuple(
                tuple(m.action.matrix[r][g * dim + j] for j in range(dim))
                for r in range(dim)
            )
        )
    return out


def rep_report(group: FiniteGroup, matrices: Sequence[Mat], carrier: DiagSpace) -> RepReport:
    sup = None
    sup_exact = True
    isometric = True
    one = carrier.field.one_norm()
    for g in range(group.order):
        bm = BoundedMap.create(carrier, carrier, matrices[g])
        if sup is None or not (bm.opnorm <= sup):
            sup = bm.opnorm
        sup_exact = sup_exact and bm.opnorm_exact
        inv = BoundedMap.create(carrier, carrier, matrices[group.inverse(g)])
        if not (bm.opnorm_exact and bm.opnorm == one and inv.opnorm == one):
            isometric = False
    return RepReport(sup, sup_exact, isometric)


# -- duality ------------------------------------------------------------------


def _pairing_matrix(dim: int, pairing) -> Mat:
    if pairing is None:
        return identity(dim)
    p = mat(pairing)
    if len(p) != dim or any(len(r) != dim for r in p):
        raise DegeneratePairing("pairing matrix has the wrong shape")
    if det(p) == 0:
        raise DegeneratePairing("pairing matrix is singular")
    return p


def dualize_algebra(alg: AlgebraData, pairing=None) -> CoalgebraData:
    """Transpose mult/unit through the pairing into comult/counit."""
    n = alg.carrier.dim
    p = _pairing_matrix(n, pairing)
    pt_inv = invert(transpose(p))
    pp_t_inv = invert(transpose(kron(p, p)))
    dual_carrier = alg.carrier.dual()
    # <Delta(f_i), e_a (x) e_b> = <f_i, e_a e_b>
    rhs_cols = []
    for i in range(n):
        rhs = [
            sum(alg.mult.matrix[c][a * n + b] * p[i][c] for c in range(n))
            for a in range(n)
            for b in range(n)
        ]
        rhs_cols.append(mat_vec(pp_t_inv, rhs))
    comult_rows = tuple(tuple(rhs_cols[i][rc] for i in range(n)) for rc in range(n * n))
    # counit(f_i) = <f_i, unit(1)>
    counit_rows = (tuple(sum(p[i][c] * alg.unit.matrix[c][0] for c in range(n)) for i in range(n)),)
    sq = tensor(dual_carrier, dual_carrier)
    return CoalgebraData(
        dual_carrier,
        BoundedMap.create(dual_carrier, sq, comult_rows),
        BoundedMap.create(dual_carrier, line(alg.carrier.field), counit_rows),
    )


def dualize_coalgebra(co: CoalgebraData, pairing=None) -> AlgebraData:
    n = co.carrier.dim
    p = _pairing_matrix(n, pairing)
    pt_inv = invert(transpose(p))
    dual_carrier = co.carrier.dual()
    mult_cols = []
    for i in range(n):
        for j in range(n):
            rhs = [
                sum(
                    co.comult.matrix[a * n + b][c] * p[i][a] * p[j][b]
                    for a in range(n)
                    for b in range(n)
                )
                for c in range(n)
            ]
            mult_cols.append(mat_vec(pt_inv, rhs))
    mult_rows = tuple(
        tuple(mult_cols[i * n + j][k] for i in range(n) for j in range(n)) for k in range(n)
    )
    unit_col = mat_vec(pt_inv, [co.counit.matrix[0][c] for c in range(n)])
    unit_rows = tuple((unit_col[k],) for k in range(n))
    sq = tensor(dual_carrier, dual_carrier)
    return AlgebraData(
        dual_carrier,
        BoundedMap.create(sq, dual_carrier, mult_rows),
        BoundedMap.create(line(co.carrier.field), dual_carrier, unit_rows),
    )


def dualize_bialgebra(bi: BialgebraData, pairing=None) -> BialgebraData:
    """The dual bialgebra: mult <-> comult and unit <-> counit exchanged."""
    return BialgebraData(dualize_coalgebra(bi.coalgebra, pairing), dualize_algebra(bi.algebra, pairing))


def coopposite(co: CoalgebraData) -> CoalgebraData:
    """Flip the two output legs of the comultiplication."""
    n = co.carrier.dim
    flipped = tuple(
        tuple(co.comult.matrix[b * n + a][c] for c in range(n))
        for a in range(n)
        for b in range(n)
    )
    return CoalgebraData(
        co.carrier,
        BoundedMap.create(co.carrier, co.comult.codomain, flipped),
        co.counit,
    )


def dualize_module(m: ModuleData, pairing=None) -> ComoduleData:
    """A-module -> comodule over the co-opposite of the dual coalgebra.

    The index transpose coact[(g, r)][j] = act[r][(g, j)] is coassociative
    against the flipped transpose of the multiplication; the flip is
    invisible for commutative algebras.
    """
    co = coopposite(dualize_algebra(m.algebra, pairing))
    a_dim = m.algebra.carrier.dim
    dim = m.carrier.dim
    p = _pairing_matrix(a_dim, pairing)
    pt_inv = invert(transpose(p))
    # coaction(e_j) = sum_i f_i (x) action(e_i' (x) e_j) with e_i' = P^-T-corrected
    rows = [[F0] * dim for _ in range(a_dim * dim)]
    for j in range(dim):
        for i in range(a_dim):
            # coefficient of f_i (x) e_r: <f_i-pairing-normalized>
            for r in range(dim):
                val = sum(
                    pt_inv[i][g] * m.action.matrix[r][g * dim + j] for g in range(a_dim)
                )
                if val:
                    rows[i * dim + r][j] = val
    coaction = BoundedMap.create(m.carrier, tensor(co.carrier, m.carrier), rows)
    return ComoduleData(co, m.carrier, coaction)


def dualize_comodule(c: ComoduleData, pairing=None) -> ModuleData:
    alg = dualize_coalgebra(coopposite(c.coalgebra), pairing)
    b_dim = c.coalgebra.carrier.dim
    dim = c.carrier.dim
    p = _pairing_matrix(b_dim, pairing)
    rows = [[F0] * (b_dim * dim) for _ in range(dim)]
    for i in range(b_dim):
        for j in range(dim):
            col = i * dim + j
            for r in range(dim):
                val = sum(p[i][d] * c.coaction.matrix[d * dim + r][j] for d in range(b_dim))
                if val:
                    rows[r][col] = val
    action = BoundedMap.create(tensor(alg.carrier, c.carrier), c.carrier, rows)
    return ModuleData(alg, c.carrier, action)


# -- comodule tensor over a bialgebra -----------------------------------------


def comodule_tensor(c1: ComoduleData, c2: ComoduleData, bialgebra: BialgebraData) -> ComoduleData:
    """Tensor of comodules; needs the bialgebra multiplication for the coaction."""
    if not isinstance(bialgebra, BialgebraData):
        raise TypeError("tensor of comodules is only defined over a bialgebra")
    b = bialgebra.carrier.dim
    m1, m2 = c1.carrier.dim, c2.carrier.dim
    carrier = tensor(c1.carrier, c2.carrier)
    rows = [[F0] * (m1 * m2) for _ in range(b * m1 * m2)]
    for col1 in range(m1):
        for col2 in range(m2):
            col = col1 * m2 + col2
            for r1 in range(b * m1):
                x = c1.coaction.matrix[r1][col1]
                if not x:
                    continue
                d1, i1 = divmod(r1, m1)
                for r2 in range(b * m2):
                    y = c2.coaction.matrix[r2][col2]
                    if not y:
                        continue
                    d2, i2 = divmod(r2, m2)
                    for brow in range(b):
                        z = bialgebra.mult.matrix[brow][d1 * b + d2]
                        if z:
                            row = brow * (m1 * m2) + i1 * m2 + i2
                            rows[row][col] += x * y * z
    coaction = BoundedMap.create(carrier, tensor(bialgebra.carrier, carrier), rows)
    return ComoduleData(bialgebra.coalgebra, carrier, coaction)


# -- the two adjunctions around the forgetful functor -------------------------


@dataclass
class AdjunctionReport:
    free_side_dim: int
    free_bijection: bool
    free_isometric: bool
    functions_side_dim: int
    functions_bijection: bool
    functions_isometric: bool

    @property
    def ok(self) -> bool:
        return self.free_bijection and self.functions_bijection


def equivariant_maps(group: FiniteGroup, rep_v: Sequence[Mat], rep_w: Sequence[Mat]) -> list[Mat]:
    """Basis of Hom_Gamma(V, W): solve pi_W(g) T = T pi_V(g) for all g."""
    dim_v = len(rep_v[0]) if rep_v[0] else 0
    dim_w = len(rep_w[0]) if rep_w[0] else 0
    rows = []
    for g in range(group.order):
        # unknowns T[r][c] flattened r*dim_v + c; equation pi_W(g) T = T pi_V(g)
        for r in range(dim_w):
            for c in range(dim_v):
                row = [F0] * (dim_w * dim_v)
                for k in range(dim_w):
                    row[k * dim_v + c] += rep_w[g][r][k]
                for k in range(dim_v):
                    row[r * dim_v + k] -= rep_v[g][k][c]
                rows.append(tuple(row))
    basis = nullspace(tuple(rows)) if rows else []
    return [
        tuple(tuple(b[r * dim_v + c] for c in range(dim_v)) for r in range(dim_w))
        for b in basis
    ]


def finite_adjunction_check(
    group: FiniteGroup,
    x_space: DiagSpace,
    rep_w: Sequence[Mat],
    w_carrier: DiagSpace,
) -> AdjunctionReport:
    """Verify both adjunction bijections on full hom bases.

    Free side: Hom(X, W) ~ Hom_Gamma(coprod_Gamma X, W) by f on copy g
    mapsto pi(g) o f, inverse by restriction to the identity copy.
    Functions side: Hom(W', k-target...) is specialized to
    Hom(F W, X) ~ Hom_Gamma(W, C(Gamma, X)) by f mapsto (v -> (g -> f(gv))),
    inverse by evaluation at the identity.
    """
    n = group.order
    fld = x_space.field
    rep_w = [mat(m) for m in rep_w]
    dim_w = w_carrier.dim
    dim_x = x_space.dim

    # free side
    free_dim = n * dim_x
    free_rep = []
    for h in range(n):
        rows = [[F0] * free_dim for _ in range(free_dim)]
        for g in range(n):
            tg = group.mul(h, g)
            for i in range(dim_x):
                rows[tg * dim_x + i][g * dim_x + i] = F1
        free_rep.append(mat(rows))
    hom_plain = [
        tuple(tuple(F1 if (r, c) == (i, j) else F0 for c in range(dim_x)) for r in range(dim_w))
        for i in range(dim_w)
        for j in range(dim_x)
    ]

    def alpha(f: Mat) -> Mat:
        cols = []
        for g in range(n):
            block = mat_mul(rep_w[g], f)
            cols.append(block)
        return tuple(
            tuple(cols[g][r][i] for g in range(n) for i in range(dim_x))
            for r in range(dim_w)
        )

    def beta(big: Mat) -> Mat:
        e = group.identity
        return tuple(
            tuple(big[r][e * dim_x + i] for i in range(dim_x)) for r in range(dim_w)
        )

    free_ok = all(beta(alpha(f)) == f for f in hom_plain)
    equiv_basis = equivariant_maps(group, free_rep, rep_w)
    free_ok = free_ok and all(alpha(beta(t)) == t for t in equiv_basis)
    free_iso = True
    coprod, _ = contracting_coproduct([x_space] * n, fld)
    for f in hom_plain:
        bm = BoundedMap.create(x_space, w_carrier, f)
        big = BoundedMap.create(coprod, w_carrier, alpha(f))
        try:
            if not (bm.opnorm == big.opnorm):
                free_iso = False
        except Exception:
            free_iso = False

    # functions side: Hom(F W, X) ~ Hom_Gamma(W, C(Gamma, X))
    from .ind import functions_from_group

    cfun = functions_from_group(group)
    cx = cfun.on_space(x_space)
    # action of h on C(Gamma, X): (h.F)(g) = F(gh)
    cx_rep = []
    for h in range(n):
        rows = [[F0] * (n * dim_x) for _ in range(n * dim_x)]
        for g in range(n):
            src = group.mul(g, h)
            for i in range(dim_x):
                rows[g * dim_x + i][src * dim_x + i] = F1
        cx_rep.append(mat(rows))
    hom_fw = [
        tuple(tuple(F1 if (r, c) == (i, j) else F0 for c in range(dim_w)) for r in range(dim_x))
        for i in range(dim_x)
        for j in range(dim_w)
    ]

    def gamma(f: Mat) -> Mat:
        rows = [[F0] * dim_w for _ in range(n * dim_x)]
        for g in range(n):
            block = mat_mul(f, rep_w[g])
            for r in range(dim_x):
                for c in range(dim_w):
                    rows[g * dim_x + r][c] = block[r][c]
        return mat(rows)

    def delta_inv(t: Mat) -> Mat:
        e = group.identity
        return tuple(tuple(t[e * dim_x + r][c] for c in range(dim_w)) for r in range(dim_x))

    fun_ok = all(delta_inv(gamma(f)) == f for f in hom_fw)
    equiv_basis2 = equivariant_maps(group, rep_w, cx_rep)
    fun_ok = fun_ok and all(gamma(delta_inv(t)) == t for t in equiv_basis2)
    fun_iso = True
    for f in hom_fw:
        bm = BoundedMap.create(w_carrier, x_space, f)
        big = BoundedMap.create(w_carrier, cx, gamma(f))
        try:
            if not (bm.opnorm == big.opnorm):
                fun_iso = False
        except Exception:
            fun_iso = False

    return AdjunctionReport(
        free_side_dim=len(equiv_basis),
        free_bijection=free_ok,
        free_isometric=free_iso,
        functions_side_dim=len(equiv_basis2),
        functions_bijection=fun_ok,
        functions_isometric=fun_iso,
    )
