"""Exact phase-1 simplex and the mixed-constraint front end."""

import random
from fractions import Fraction

import pytest

from canon4.lp import feasible_point, phase_one


def check(constraints, x):
    for coeffs, rel, c in constraints:
        lhs = sum(Fraction(a) * v for a, v in zip(coeffs, x))
        if rel == "==":
            assert lhs == c
        elif rel == ">=":
            assert lhs >= c
        else:
            assert lhs <= c


def test_simple_equality_system():
    cons = [([1, 1], "==", 3), ([1, -1], "==", 1)]
    x = feasible_point(cons, 2)
    assert x == [Fraction(2), Fraction(1)]


def test_mixed_constraints():
    cons = [
        ([1, 1, 1], "==", 0),
        ([1, 0, 0], ">=", 2),
        ([0, 1, 0], "<=", -1),
    ]
    x = feasible_point(cons, 3)
    assert x is not None
    check(cons, x)


def test_detects_infeasible():
    cons = [([1, 0], ">=", 1), ([1, 0], "<=", 0)]
    assert feasible_point(cons, 2) is None
    cons = [([1, 1], "==", 1), ([1, 1], "==", 2)]
    assert feasible_point(cons, 2) is None


def test_width_mismatch_raises():
    with pytest.raises(ValueError):
        feasible_point([([1, 2, 3], "==", 0)], 2)
    with pytest.raises(ValueError):
        feasible_point([([1, 2], "~=", 0)], 2)


def test_empty_system_is_feasible():
    assert feasible_point([], 3) == [0, 0, 0]


def test_phase_one_negative_rhs_rows():
    # rows get sign-flipped internally; answer must still satisfy A x = b
    A = [[-1, -1, 0], [0, 1, 1]]
    b = [Fraction(-2), Fraction(1)]
    x = phase_one(A, b)
    assert x is not None
    assert [sum(r * v for r, v in zip(row, x)) for row in A] == b
    assert all(v >= 0 for v in x)


def test_phase_one_respects_nonnegativity():
    # x + y = -2 has no solution in the positive orthant
    assert phase_one([[1, 1]], [Fraction(-2)]) is None


def test_degenerate_ties_terminate():
    # many redundant rows with zero rhs produce repeated ratio-test ties;
    # Bland's rule must still leave the loop
    A = [
        [1, -1, 0, 0],
        [1, 0, -1, 0],
        [1, 0, 0, -1],
        [2, -1, -1, 0],
        [3, -1, -1, -1],
    ]
    b = [Fraction(0)] * 5
    x = phase_one(A, b)
    assert x is not None
    for row in A:
        assert sum(r * v for r, v in zip(row, x)) == 0


def test_randomized_feasible_systems_are_solved():
    rng = random.Random(318)
    for _ in range(30):
        n = rng.randrange(2, 5)
        x0 = [Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)) for _ in range(n)]
        cons = []
        for _ in range(rng.randrange(1, 6)):
            coeffs = [rng.randrange(-3, 4) for _ in range(n)]
            val = sum(Fraction(c) * v for c, v in zip(coeffs, x0))
            rel = rng.choice(["==", ">=", "<="])
            if rel == ">=":
                rhs = val - rng.randrange(0, 3)
            elif rel == "<=":
                rhs = val + rng.randrange(0, 3)
            else:
                rhs = val
            cons.append((coeffs, rel, rhs))
        x = feasible_point(cons, n)
        assert x is not None, cons
        check(cons, x)


def test_contradictory_strip_is_infeasible():
    rng = random.Random(77)
    for _ in range(15):
        n = rng.randrange(2, 4)
        coeffs = [rng.randrange(1, 4) for _ in range(n)]
        cons = [(coeffs, ">=", 5), (coeffs, "<=", 4)]
        assert feasible_point(cons, n) is None
