"""Exact linear algebra helpers: rational elimination, integer Smith form.

Everything works on plain lists of lists.  Rational routines expect entries
coercible to Fraction; the Smith normal form works over the integers and
returns unimodular transforms so callers can extract kernels and
diagonalize Gram matrices with a certificate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def frac_matrix(rows):
    return [[Fraction(x) for x in r] for r in rows]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]
    return out

def mat_vec(A, v):
    return [sum(A[i][j] * v[j] for j in range(len(v))) for i in range(len(A))]


def identity(n, one=1):
    return [[one if i == j else one * 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def rref(rows):
    """Reduced row echelon form over Q.

    Returns (R, pivots) where pivots lists the pivot column of each
    nonzero row of R.
    """
    A = frac_matrix(rows)
    if not A:
        return A, []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows):
    """Basis of the rational right kernel, one vector per free column."""
    R, pivots = rref(rows)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][fc]
        basis.append(v)
    return basis


def solve_linear(A, b):
    """One exact solution of A x = b, or None if inconsistent."""
    if not A:
        return []
    ncols = len(A[0])
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    for i, row in enumerate(R):
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = R[i][ncols]
    return x


def det_fraction(rows):
    A = frac_matrix(rows)
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return det


def invert(rows):
    n = len(rows)
    aug = [list(map(Fraction, rows[i])) + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def primitive_vector(v):
    """Scale a rational vector to coprime integers, first nonzero entry > 0."""
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive form")
    from math import lcm

    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def generic_rank(rows):
    """Rank of a matrix over any exact field (entries support truthiness, /)."""
    A = [list(r) for r in rows]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        for i in range(r + 1, nrows):
            if A[i][c]:
                f = A[i][c] / pv
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == nrows:
            break
    return r


def generic_nullspace(rows):
    """Right-kernel basis over any exact field."""
    A = [list(r) for r in rows]
    if not A:
        return []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        A[r] = [x / pv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    zero = rows[0][0] * 0
    one = zero + 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = zero - A[i][fc]
        basis.append(v)
    return basis


# ----------------------------------------------------------------------
# Smith normal form over Z

def smith_normal_form(M):
    """Smith normal form with transforms.

    Returns (U, D, V) with U @ M @ V = D, U and V unimodular, D diagonal
    with d1 | d2 | ... and nonnegative entries.
    """
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    m = len(A[0]) if n else 0
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(n, m):
        # find a pivot: smallest nonzero magnitude in the trailing block
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, n):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, m):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility: pivot must divide every later entry
        fixed = True
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if A[i][j] % A[t][t] != 0:
                    add_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if A[t][t] < 0:
            negate_row(t)
        t += 1
    return U, A, V


def smith_diagonal(M):
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_kernel(M):
    """Basis of the saturated integer kernel of M (as a lattice in Z^m)."""
    U, D, V = smith_normal_form(M)
    n = len(M)
    m = len(M[0]) if n else 0
    r = sum(1 for i in range(min(n, m)) if D[i][i] != 0)
    # columns of V past the rank span the kernel
    return [[V[i][j] for i in range(m)] for j in range(r, m)]


def is_unimodular(M):
    d = det_fraction(M)
    return d == 1 or d == -1


# ----------------------------------------------------------------------
# fraction-free (Bareiss) determinant over any exact-division ring

def bareiss_det(rows, ring_one, exact_div):
    """Determinant by the fraction-free Bareiss algorithm.

    ``rows`` holds elements of a commutative ring supporting +, -, *,
    bool (nonzero test) and the supplied ``exact_div(a, b)``.  All the
    intermediate divisions are exact, so this works for polynomial
    entries with no fractions appearing.
    """
    A = [list(r) for r in rows]
    n = len(A)
    if n == 0:
        return ring_one
    sign = 1
    prev = ring_one
    for k in range(n - 1):
        if not A[k][k]:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                # whole column zero from the pivot down: determinant vanishes
                return A[k][k] * 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[k][k] * A[i][j] - A[i][k] * A[k][j]
                A[i][j] = exact_div(num, prev)
            A[i][k] = A[i][k] * 0
        prev = A[k][k]
    result = A[n - 1][n - 1]
    return result if sign == 1 else -result
