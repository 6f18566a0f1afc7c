"""Exact rational linear programming, just enough for feasibility runs.

A single phase-1 simplex over Fraction arithmetic with Bland's rule,
which terminates deterministically and never cycles.  Problems are
given in equality standard form min c.x, A x = b, x >= 0.
"""

from __future__ import annotations

from fractions import Fraction


def _pivot(T, r, c):
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c]:
            coef = row[c]
            T[i] = [v - coef * w for v, w in zip(row, T[r])]


def phase_one(A, b):
    """Feasibility of A x = b, x >= 0 by minimizing artificial variables.

    Returns a list of Fractions (a feasible x) or None.  Bland's rule:
    entering column is the lowest-index one with negative reduced cost,
    and ties in the ratio test go to the row whose basic variable has
    the lowest index, which is what rules out cycling.
    """
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # tableau columns: n structural + m artificial + rhs
    T = []
    for i in range(m):
        row = A[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [b[i]]
        T.append(row)
    # objective: sum of artificials, expressed through the basis
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        obj = [o - v for o, v in zip(obj, T[i])]
    T.append(obj)
    basis = [n + i for i in range(m)]

    while True:
        enter = None
        for j in range(n + m):
            if T[m][j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded phase-1 objective cannot happen (bounded below by 0)
            raise AssertionError("phase-1 ratio test found no pivot")
        _pivot(T, leave, enter)
        basis[leave] = enter

    if T[m][-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = T[i][-1]
        elif T[i][-1] != 0:
            # a nonzero artificial survived despite zero objective
            return None
    return x


def feasible_point(constraints, n):
    """A rational solution of mixed equality/inequality constraints.

    ``constraints`` is a list of (coeffs, rel, rhs) with rel one of
    "==", ">=", "<="; the n variables are free (unrestricted in sign).
    Returns a list of Fractions or None when infeasible.
    """
    if not constraints:
        return [Fraction(0)] * n
    rows = []
    rhs = []
    n_slack = sum(1 for _, rel, _ in constraints if rel != "==")
    slack_at = 0
    for coeffs, rel, c in constraints:
        if len(coeffs) != n:
            raise ValueError("constraint width disagrees with variable count")
        # free variables split as x = u - v with u, v >= 0
        row = [Fraction(v) for v in coeffs] + [-Fraction(v) for v in coeffs]
        slacks = [Fraction(0)] * n_slack
        if rel == ">=":
            slacks[slack_at] = Fraction(-1)
            slack_at += 1
        elif rel == "<=":
            slacks[slack_at] = Fraction(1)
            slack_at += 1
        elif rel != "==":
            raise ValueError(f"unknown relation {rel!r}")
        rows.append(row + slacks)
        rhs.append(Fraction(c))
    sol = phase_one(rows, rhs)
    if sol is None:
        return None
    return [sol[i] - sol[n + i] for i in range(n)]
