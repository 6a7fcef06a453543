"""Exact linear programming over the rationals.

A small dense two-phase simplex with Bland's rule (so it terminates) on
standard-form problems  min c.x  s.t.  A x = b, x >= 0,  with Fraction
arithmetic throughout.  Problem sizes here are tiny (a few hundred
columns), so no effort is spent on sparsity or revised-simplex updates.

Convenience wrappers express the two norm-minimization problems the
library needs (weighted l1 and weighted sup distance from a point to a
subspace) in standard form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import BanlabError
from .linalg import F0, F1, Vec, frac, mat, vec


class Infeasible(BanlabError):
    pass


class Unbounded(BanlabError):
    pass


def simplex_minimize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, Vec]:
    """min c.x subject to A x = b, x >= 0.  Returns (value, x)."""
    c = list(vec(c))
    rows = [list(vec(r)) for r in A]
    rhs = [frac(x) for x in b]
    m, n = len(rows), len(c)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # tableau columns: n structural + m artificial + 1 rhs
    tab = [rows[i] + [F1 if j == i else F0 for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]

    def pivot(r: int, col: int):
        prow = tab[r]
        inv = F1 / prow[col]
        tab[r] = [x * inv for x in prow]
        prow = tab[r]
        for i in range(len(tab)):
            if i != r and tab[i][col]:
                f = tab[i][col]
                tab[i] = [x - f * y for x, y in zip(tab[i], prow)]
        basis[r] = col

    def run_phase(cost: list[Fraction], allowed: int):
        # reduced costs z_j = c_j - c_B . column_j for the current basis
        width = len(tab[0])
        cb = [cost[bv] for bv in basis]
        z = []
        for j in range(width):
            colval = sum(cb[i] * tab[i][j] for i in range(m))
            base = cost[j] if j < len(cost) else F0
            z.append(base - colval)
        while True:
            enter = next((j for j in range(allowed) if z[j] < 0), None)
            if enter is None:
                return z
            ratios = [
                (tab[i][-1] / tab[i][enter], basis[i], i)
                for i in range(m)
                if tab[i][enter] > 0
            ]
            if not ratios:
                raise Unbounded("LP is unbounded")
            _, _, leave = min(ratios)  # Bland: min ratio, ties by basis index
            f = z[enter]
            pivot(leave, enter)
            z = [x - f * y for x, y in zip(z, tab[leave])]

    # phase 1: minimize sum of artificials
    phase1_cost = [F0] * n + [F1] * m
    z = run_phase(phase1_cost, n + m)
    value1 = -z[-1]
    if value1 != 0:
        raise Infeasible(f"no feasible point (phase-1 value {value1})")
    # drive artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j]), None)
            if col is not None:
                pivot(r, col)
    # rows still basic in an artificial are identically zero; freeze them
    for r in range(m):
        if basis[r] >= n:
            tab[r] = [F0] * len(tab[r])
            tab[r][basis[r]] = F1

    phase2_cost = c + [F0] * m
    run_phase(phase2_cost, n)
    x = [F0] * n
    for r, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[r][-1]
    value = sum(c[j] * x[j] for j in range(n))
    return value, tuple(x)


def min_weighted_l1_over_coset(target: Sequence, span: Sequence[Sequence], weights: Sequence) -> tuple[Fraction, Vec]:
    """min over coefficients c of sum_j w_j |target_j - (span^T c)_j|.

    `span` holds the subspace basis as rows.  Returns (value, best point of
    the coset achieving it).
    """
    target = vec(target)
    weights = [frac(w) for w in weights]
    rows = mat(span) if span else ()
    r = len(rows)
    n = len(target)
    # variables: c+ (r), c- (r), s+ (n), s- (n); constraint per coordinate:
    #   target_j = sum_k rows[k][j] (c+_k - c-_k) + s+_j - s-_j
    cost = [F0] * (2 * r) + weights + weights
    A = []
    for j in range(n):
        row = [rows[k][j] for k in range(r)] + [-rows[k][j] for k in range(r)]
        row += [F1 if i == j else F0 for i in range(n)]
        row += [-F1 if i == j else F0 for i in range(n)]
        A.append(row)
    value, x = simplex_minimize(cost, A, target)
    coeffs = [x[k] - x[r + k] for k in range(r)]
    point = tuple(
        target[j] - sum(coeffs[k] * rows[k][j] for k in range(r)) for j in range(n)
    )
    return value, point


def min_weighted_sup_over_coset(target: Sequence, span: Sequence[Sequence], weights: Sequence) -> tuple[Fraction, Vec]:
    """min over c of max_j w_j |target_j - (span^T c)_j|."""
    target = vec(target)
    weights = [frac(w) for w in weights]
    rows = mat(span) if span else ()
    r = len(rows)
    n = len(target)
    # variables: c+ (r), c- (r), t (1), slack u_j, v_j (2n):
    #   w_j (target_j - Rc)_j + u_j = t   and  -w_j (...) + v_j = t
    cost = [F0] * (2 * r) + [F1] + [F0] * (2 * n)
    A = []
    b = []
    for j in range(n):
        w = weights[j]
        base = [w * rows[k][j] for k in range(r)] + [-w * rows[k][j] for k in range(r)]
        row1 = [-x for x in base] + [-F1] + [F1 if i == j else F0 for i in range(n)] + [F0] * n
        A.append(row1)
        b.append(-w * target[j])
        row2 = base + [-F1] + [F0] * n + [F1 if i == j else F0 for i in range(n)]
        A.append(row2)
        b.append(w * target[j])
    value, x = simplex_minimize(cost, A, b)
    coeffs = [x[k] - x[r + k] for k in range(r)]
    point = tuple(
        target[j] - sum(coeffs[k] * rows[k][j] for k in range(r)) for j in range(n)
    )
    return value, point
