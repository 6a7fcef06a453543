"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of Fraction; vectors are tuples of
Fraction.  Everything here is pure and exact.  Dense routines are fine at
desk scale (dims up to a few hundred); the sparse row-echelon machinery
exists for relation spaces of bimodule tensor products, whose rows are
short even when the ambient dimension is in the thousands.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[tuple[Fraction, ...], ...]

F0 = Fraction(0)
F1 = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries: Iterable) -> Vec:
    return tuple(frac(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def zeros(n: int) -> Vec:
    return (F0,) * n


def identity(n: int) -> Mat:
    return tuple(tuple(F1 if i == j else F0 for j in range(n)) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Mat:
    return tuple((F0,) * cols for _ in range(rows))


def mat_vec(m: Mat, v: Sequence[Fraction]) -> Vec:
    return tuple(sum((row[j] * v[j] for j in range(len(v)) if v[j]), F0) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"matrix shapes do not compose: {len(a[0])} vs {len(b)}")
    bt = transpose(b)
    return tuple(
        tuple(sum((ra[k] * cb[k] for k in range(len(ra)) if ra[k]), F0) for cb in bt)
        for ra in a
    )


def transpose(m: Mat) -> Mat:
    if not m:
        return ()
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Fraction, m: Mat) -> Mat:
    return tuple(tuple(c * x for x in row) for row in m)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vec:
    return tuple(c * x for x in v)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; row/column index (i,j) is flattened as i*dim_b + j."""
    if not a or not b:
        return ()
    br, bc = len(b), len(b[0])
    out = []
    for ra in a:
        for rb in b:
            out.append(tuple(x * y for x in ra for y in rb))
    assert len(out) == len(a) * br and (not out or len(out[0]) == len(a[0]) * bc)
    return tuple(out)


def hstack(a: Mat, b: Mat) -> Mat:
    return tuple(ra + rb for ra, rb in zip(a, b))


def vstack(a: Mat, b: Mat) -> Mat:
    return a + b


def basis_vector(n: int, i: int) -> Vec:
    return tuple(F1 if j == i else F0 for j in range(n))


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def nullspace(m: Mat) -> list[Vec]:
    """Basis of the right kernel of m."""
    if not m:
        return []
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F0] * ncols
        v[fc] = F1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def det(m: Mat) -> Fraction:
    n = len(m)
    if n == 0:
        return F1
    rows = [list(r) for r in m]
    result = F1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return F0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = F1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def invert(m: Mat) -> Mat:
    n = len(m)
    aug = tuple(tuple(m[i]) + basis_vector(n, i) for i in range(n))
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in red)


def solve(m: Mat, rhs: Sequence[Fraction]) -> Vec | None:
    """One solution of m x = rhs, or None if inconsistent."""
    n = len(m)
    ncols = len(m[0]) if m else 0
    aug = tuple(tuple(m[i]) + (frac(rhs[i]),) for i in range(n))
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [F0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def row_space_equal(a: Mat, b: Mat) -> bool:
    """Do two matrices span the same row space?"""
    ra, pa = rref(a) if a else ((), [])
    rb, pb = rref(b) if b else ((), [])
    na = [row for row in ra[: len(pa)]]
    nb = [row for row in rb[: len(pb)]]
    return na == nb


def in_row_space(m: Mat, v: Sequence[Fraction]) -> bool:
    if not any(v):
        return True
    if not m:
        return False
    return rank(m) == rank(m + (tuple(v),))


class SparseEchelon:
    """Incremental reduced row echelon over Q with sparse rows.

    Rows are dicts column -> Fraction.  Designed for relation spaces whose
    rows stay short; full back-substitution keeps pivot rows reduced.
    """

    def __init__(self):
        self.pivot_rows: dict[int, dict[int, Fraction]] = {}

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {c: x for c, x in row.items() if x}
        while True:
            hit = next((c for c in row if c in self.pivot_rows), None)
            if hit is None:
                return row
            f = row[hit]
            for c, x in self.pivot_rows[hit].items():
                nx = row.get(c, F0) - f * x
                if nx:
                    row[c] = nx
                else:
                    row.pop(c, None)
        return row

    def insert(self, row: dict[int, Fraction]) -> bool:
        """Reduce and insert; returns True if the row added a new pivot."""
        row = self.reduce(row)
        if not row:
            return False
        pc = max(row)
        inv = F1 / row[pc]
        row = {c: x * inv for c, x in row.items()}
        for opc, orow in self.pivot_rows.items():
            if pc in orow:
                f = orow[pc]
                for c, x in row.items():
                    nx = orow.get(c, F0) - f * x
                    if nx:
                        orow[c] = nx
                    else:
                        orow.pop(c, None)
        self.pivot_rows[pc] = row
        return True

    @property
    def pivots(self) -> list[int]:
        return sorted(self.pivot_rows)

    def contains(self, row: dict[int, Fraction]) -> bool:
        return not self.reduce(row)
