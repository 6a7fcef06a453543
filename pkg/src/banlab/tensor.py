"""Projective tensor products and bimodule tensor products over algebras.

The completed projective tensor norm is diagonal exactly for l1 (x) l1 in
the archimedean backend (l1(I) (x) l1(J) = l1(I x J)) and for sup (x) sup
non-archimedean; those products are exact DiagSpaces.  Every other
archimedean flavor pair gets the honest enclosure [max-diagonal,
sum-diagonal] of the projective norm and is flagged inexact; certificates
derived from such spaces inherit the taint through the exactness flags.

Bimodule tensor products M (x)_S N are quotients of M (x) N by the span of
(m.s)(x)n - m(x)(s.n).  The quotient basis is chosen by (sparse) Gaussian
elimination; the quotient seminorm is evaluated on demand, by exact LP in
the archimedean case and by a discrete-valuation-ring computation in the
non-archimedean case (which needs integer p-power weights, the only case
the constructions here produce).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, MixedBackends, NotAnAction, UnsupportedWeights
from .exactlp import min_weighted_l1_over_coset, min_weighted_sup_over_coset
from .linalg import (
    F0,
    F1,
    Mat,
    SparseEchelon,
    Vec,
    basis_vector,
    frac,
    identity,
    kron,
    mat_mul,
    mat_vec,
    vec,
)
from .nspace import MAX, SUM, BoundedMap, DiagSpace
from .scalar import ArchNorm, PadicNorm, padic_valuation


@dataclass(frozen=True)
class TensorSpace(DiagSpace):
    factors: tuple[DiagSpace, DiagSpace] | None = None


def tensor(a: DiagSpace, b: DiagSpace) -> TensorSpace:
    """Projective tensor product carrier on the product basis."""
    if a.field != b.field:
        raise MixedBackends("tensor factors over different fields")
    labels = tuple(f"{la}*{lb}" for la in a.labels for lb in b.labels)
    weights = tuple(wa * wb for wa in a.weights for wb in b.weights)
    fld = a.field
    if fld.is_padic:
        flavor, inexact = MAX, a.inexact or b.inexact
    elif a.flavor == SUM and b.flavor == SUM and not (a.inexact or b.inexact):
        flavor, inexact = SUM, False
    else:
        flavor, inexact = MAX, True
    return TensorSpace(fld, labels, weights, flavor, inexact, factors=(a, b))


def tensor_map(f: BoundedMap, g: BoundedMap) -> BoundedMap:
    """f (x) g on the tensor carriers, with the Kronecker matrix."""
    dom = tensor(f.domain, g.domain)
    cod = tensor(f.codomain, g.codomain)
    return BoundedMap.create(dom, cod, kron(f.matrix, g.matrix))


def tensor_index(a: DiagSpace, b: DiagSpace, i: int, j: int) -> int:
    return i * b.dim + j


def elementary_tensor(a: DiagSpace, b: DiagSpace, x: Sequence, y: Sequence) -> Vec:
    x, y = vec(x), vec(y)
    return tuple(xi * yj for xi in x for yj in y)


class QuotientSpace:
    """Quotient of a DiagSpace by a rational subspace, with the quotient seminorm.

    Coordinates on the quotient are the non-pivot ambient coordinates of
    the reduced row-echelon form of the relation span; `project` reduces an
    ambient vector to those coordinates, `lift` is the canonical section.
    """

    def __init__(self, ambient: DiagSpace, relation_rows: Sequence[dict[int, Fraction]]):
        self.ambient = ambient
        ech = SparseEchelon()
        for row in relation_rows:
            ech.insert(dict(row))
        self._ech = ech
        self.pivot_cols = ech.pivots
        self.basis_cols = [c for c in range(ambient.dim) if c not in ech.pivot_rows]
        self._col_pos = {c: k for k, c in enumerate(self.basis_cols)}

    @property
    def dim(self) -> int:
        return len(self.basis_cols)

    @property
    def relation_rank(self) -> int:
        return len(self.pivot_cols)

    def project(self, ambient_vec: Sequence) -> Vec:
        """Quotient coordinates of an ambient vector."""
        row = {i: frac(x) for i, x in enumerate(ambient_vec) if x}
        reduced = self._ech.reduce(row)
        out = [F0] * self.dim
        for c, x in reduced.items():
            out[self._col_pos[c]] = x
        return tuple(out)

    def lift(self, quotient_vec: Sequence) -> Vec:
        out = [F0] * self.ambient.dim
        for k, x in enumerate(quotient_vec):
            if x:
                out[self.basis_cols[k]] = frac(x)
        return tuple(out)

    def contains_relation(self, ambient_vec: Sequence) -> bool:
        row = {i: frac(x) for i, x in enumerate(ambient_vec) if x}
        return self._ech.contains(row)

    def relation_basis(self) -> list[Vec]:
        rows = []
        for pc in self.pivot_cols:
            row = self._ech.pivot_rows[pc]
            out = [F0] * self.ambient.dim
            for c, x in row.items():
                out[c] = x
            rows.append(tuple(out))
        return rows

    def norm(self, quotient_vec: Sequence):
        """Quotient seminorm: distance of any representative to the relation span."""
        x = self.lift(quotient_vec)
        rel = self.relation_basis()
        fld = self.ambient.field
        if not any(x):
            return fld.zero_norm()
        if fld.is_padic:
            return self._padic_norm(x, rel)
        weights = self.ambient.exact_weight_fractions()
        if weights is None:
            raise UnsupportedWeights("archimedean quotient norms need exact rational weights")
        if self.ambient.flavor == SUM and not self.ambient.inexact:
            value, _ = min_weighted_l1_over_coset(x, rel, weights)
            return ArchNorm.exact(value)
        if self.ambient.flavor == MAX and not self.ambient.inexact:
            value, _ = min_weighted_sup_over_coset(x, rel, weights)
            return ArchNorm.exact(value)
        lo, _ = min_weighted_sup_over_coset(x, rel, weights)
        hi, _ = min_weighted_l1_over_coset(x, rel, weights)
        return ArchNorm(lo, hi)

    def _padic_norm(self, x: Vec, rel: list[Vec]):
        fld = self.ambient.field
        p = fld.prime
        exps = []
        for w in self.ambient.weights:
            if not isinstance(w, PadicNorm) or w.unit != 1 or w.exp.denominator != 1:
                raise UnsupportedWeights(f"padic quotient norms need integer p-power weights, got {w}")
            exps.append(int(w.exp))
        # |y_j| = w_j |x_j| after scaling by p^(-e_j), turning the norm into a plain sup
        scale = [Fraction(p) ** (-e) for e in exps]
        y = [x[j] * scale[j] for j in range(len(x))]
        rel_scaled = [[r[j] * scale[j] for j in range(len(r))] for r in rel]
        # project modulo the relation span
        ech = SparseEchelon()
        for r in rel_scaled:
            ech.insert({i: v for i, v in enumerate(r) if v})
        free = [c for c in range(len(y)) if c not in ech.pivot_rows]
        if not free:
            return fld.zero_norm()

        def pi(v):
            reduced = ech.reduce({i: val for i, val in enumerate(v) if val})
            return [reduced.get(c, F0) for c in free]

        z = pi(y)
        if not any(z):
            return fld.zero_norm()
        gens = [pi(basis_vector(len(y), j)) for j in range(len(y))]
        B = _dvr_column_reduce(gens, p)
        from .linalg import solve

        s = solve(B, z)
        assert s is not None, "lattice generators should span the quotient"
        # y lies in U + p^m Lambda exactly when every coefficient over the
        # Hermite basis has valuation >= m; the distance is p^(-max m)
        vstar = min(padic_valuation(si, p) for si in s if si)
        return PadicNorm(p, F1, Fraction(-vstar))

    def __repr__(self):
        return f"QuotientSpace(dim={self.dim}, ambient={self.ambient.dim}, {self.ambient.field.backend})"


def _dvr_column_reduce(gens: list[list[Fraction]], p: int) -> list[list[Fraction]]:
    """Column-reduce generators of a full-rank Z_(p)-module to a square basis.

    gens: list over ambient columns of their images (each a list over the
    quotient coordinates).  Returns rows of a lower-triangular matrix B
    whose columns generate the same module.  Elimination is forward-only:
    a used pivot column is never touched again, because clearing its later
    entries against a subsequent pivot can need a multiplier of negative
    valuation, which is not a unimodular operation over Z_(p) and would
    change the module.
    """
    cols = [list(g) for g in gens]
    nrows = len(cols[0]) if cols else 0
    used: list[int] = []
    for r in range(nrows):
        best = None
        best_v = None
        for ci, col in enumerate(cols):
            if ci in used or not col[r]:
                continue
            v = padic_valuation(col[r], p)
            if best_v is None or v < best_v:
                best, best_v = ci, v
        assert best is not None, "module not full rank"
        pivot = cols[best][r]
        for ci, col in enumerate(cols):
            if ci == best or ci in used or not col[r]:
                continue
            f = col[r] / pivot  # valuation >= 0 by pivot minimality
            cols[ci] = [a - f * b for a, b in zip(col, cols[best])]
        used.append(best)
    basis_cols = [cols[ci] for ci in used]
    # rows of B: B[r][k] = basis_cols[k][r]
    return [[basis_cols[k][r] for k in range(len(used))] for r in range(nrows)]


def _check_right_action(m_space: DiagSpace, algebra, action: BoundedMap) -> None:
    s_space = algebra.carrier
    if action.domain.dim != m_space.dim * s_space.dim or action.codomain.dim != m_space.dim:
        raise DimensionMismatch("right action has wrong shape")
    # associativity (m.s).s' = m.(ss') on M (x) S (x) S
    lhs = mat_mul(action.matrix, kron(action.matrix, identity(s_space.dim)))
    rhs = mat_mul(action.matrix, kron(identity(m_space.dim), algebra.mult.matrix))
    if lhs != rhs:
        raise NotAnAction("right action fails associativity")
    unit_side = mat_mul(action.matrix, kron(identity(m_space.dim), algebra.unit.matrix))
    if unit_side != identity(m_space.dim):
        raise NotAnAction("right action fails the unit law")


def _check_left_action(n_space: DiagSpace, algebra, action: BoundedMap) -> None:
    s_space = algebra.carrier
    if action.domain.dim != s_space.dim * n_space.dim or action.codomain.dim != n_space.dim:
        raise DimensionMismatch("left action has wrong shape")
    lhs = mat_mul(action.matrix, kron(identity(s_space.dim), action.matrix))
    rhs = mat_mul(action.matrix, kron(algebra.mult.matrix, identity(n_space.dim)))
    if lhs != rhs:
        raise NotAnAction("left action fails associativity")
    unit_side = mat_mul(action.matrix, kron(algebra.unit.matrix, identity(n_space.dim)))
    if unit_side != identity(n_space.dim):
        raise NotAnAction("left action fails the unit law")


def bimodule_tensor(
    m_space: DiagSpace,
    right_action: BoundedMap,
    algebra,
    n_space: DiagSpace,
    left_action: BoundedMap,
) -> QuotientSpace:
    """M (x)_S N as a quotient of M (x) N.

    Verifies that the given maps are actual actions, spans the relations
    (m.s)(x)n - m(x)(s.n) over basis triples, and eliminates.
    """
    _check_right_action(m_space, algebra, right_action)
    _check_left_action(n_space, algebra, left_action)
    s_dim = algebra.carrier.dim
    md, nd = m_space.dim, n_space.dim
    ambient = tensor(m_space, n_space)
    rows = []
    for i in range(md):
        for k in range(s_dim):
            ms = tuple(right_action.matrix[r][i * s_dim + k] for r in range(md))
            sn_cols = [tuple(left_action.matrix[r][k * nd + j] for r in range(nd)) for j in range(nd)]
            for j in range(nd):
                row: dict[int, Fraction] = {}
                for r in range(md):
                    if ms[r]:
                        row[r * nd + j] = row.get(r * nd + j, F0) + ms[r]
                sn = sn_cols[j]
                for r in range(nd):
                    if sn[r]:
                        idx = i * nd + r
                        row[idx] = row.get(idx, F0) - sn[r]
                if row:
                    rows.append(row)
    return QuotientSpace(ambient, rows)


def quotient_map(source: QuotientSpace, target: QuotientSpace, ambient_matrix: Mat) -> Mat:
    """Push an ambient map to quotient coordinates, checking well-definedness."""
    for rel in source.relation_basis():
        image = mat_vec(ambient_matrix, rel)
        if not target.contains_relation(image):
            raise NotAnAction("ambient map does not preserve the relation spans")
    cols = []
    for k in range(source.dim):
        image = mat_vec(ambient_matrix, source.lift(basis_vector(source.dim, k)))
        cols.append(target.project(image))
    return tuple(tuple(cols[k][r] for k in range(source.dim)) for r in range(target.dim))
