import random
from fractions import Fraction as Fr

import pytest

from banlab.exactlp import (
    Infeasible,
    Unbounded,
    min_weighted_l1_over_coset,
    min_weighted_sup_over_coset,
    simplex_minimize,
)

scipy = pytest.importorskip("scipy")
from scipy.optimize import linprog  # noqa: E402


def test_small_frozen_cases():
    # min x + y st x + y = 1 -> 1
    val, x = simplex_minimize([1, 1], [[1, 1]], [1])
    assert val == 1
    # distance computations
    assert min_weighted_l1_over_coset([1, 0], [[1, 1]], [1, 1])[0] == 1
    assert min_weighted_sup_over_coset([1, 0], [[1, 1]], [1, 1])[0] == Fr(1, 2)
    assert min_weighted_l1_over_coset([3, 4], [], [1, 1])[0] == 7
    with pytest.raises(Infeasible):
        simplex_minimize([1], [[1], [1]], [1, 2])
    with pytest.raises(Unbounded):
        simplex_minimize([-1], [[0]], [0])


def test_against_scipy_random():
    rng = random.Random(7)
    for _ in range(150):
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        A = [[Fr(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        b = [Fr(rng.randint(-3, 3)) for _ in range(m)]
        c = [Fr(rng.randint(-2, 4)) for _ in range(n)]
        res = linprog(
            [float(v) for v in c],
            A_eq=[[float(v) for v in row] for row in A],
            b_eq=[float(v) for v in b],
            bounds=(0, None),
            method="highs",
        )
        try:
            val, x = simplex_minimize(c, A, b)
            mine = ("opt", float(val))
            # the reported point must be exactly feasible
            for row, rhs in zip(A, b):
                assert sum(r * xi for r, xi in zip(row, x)) == rhs
            assert all(xi >= 0 for xi in x)
        except Infeasible:
            mine = ("infeasible", None)
        except Unbounded:
            mine = ("unbounded", None)
        ref = {0: "opt", 2: "infeasible", 3: "unbounded"}.get(res.status, "?")
        assert mine[0] == ref
        if ref == "opt":
            assert abs(mine[1] - res.fun) < 1e-7
