"""Small exact univariate utilities (coefficient lists, low degree first).

Used by the plane-component search, which reduces to asking for the
common rational or quadratic-irrational roots of a handful of
polynomials in the pencil parameter.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .domains import sqrt_fraction


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    a = trim(a)
    return len(a) - 1 if a else -1


def add(a, b):
    n = max(len(a), len(b))
    return trim([ (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def divmod_poly(a, b):
    a = [Fraction(x) for x in trim(a)]
    b = [Fraction(x) for x in trim(b)]
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a
    while r and len(r) >= len(b):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        r = trim([r[i] - c * b[i - k] if 0 <= i - k < len(b) else r[i] for i in range(len(r))])
    return trim(q), trim(r)


def poly_gcd(a, b):
    """Monic gcd over Q."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [x / lead for x in a]


def evaluate(a, x):
    acc = Fraction(0)
    for c in reversed(trim(a)):
        acc = acc * x + c
    return acc


def primitive_int_coeffs(a):
    a = trim(a)
    if not a:
        return []
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def _divisors(n, limit=200000):
    n = abs(n)
    if n == 0:
        return None
    out = set()
    d = 1
    while d * d <= n:
        if d > limit:
            return None
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(a):
    """All rational roots, or None if the search space is intractable."""
    a = trim(a)
    if degree(a) <= 0:
        return []
    ints = primitive_int_coeffs(a)
    roots = []
    work = list(ints)
    while work and work[0] == 0:
        roots.append(Fraction(0))
        work = work[1:]
    if degree(work) <= 0:
        return roots
    ps = _divisors(work[0])
    qs = _divisors(work[-1])
    if ps is None or qs is None:
        return None
    seen = set()
    for num in ps:
        for den in qs:
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if evaluate(work, cand) == 0:
                    roots.append(cand)
    return roots


def deflate(a, root):
    """Divide by (t - root) exactly."""
    q, r = divmod_poly(a, [-root, Fraction(1)])
    if r:
        raise ValueError("not a root")
    return q


def split_roots(a):
    """Roots of a over Q plus quadratic-extension data for what remains.

    Returns (rational_roots, quadratic_factors, unresolved) where each
    quadratic factor is a monic (c, b) pair standing for t^2 + b t + c
    irreducible over Q, and ``unresolved`` is a leftover factor of degree
    >= 3 (empty list when fully split).  Returns None when even the
    rational-root search is intractable.
    """
    a = trim(a)
    if degree(a) <= 0:
        return [], [], []
    rr = rational_roots(a)
    if rr is None:
        return None
    work = list(a)
    found = []
    for r in rr:
        while True:
            q, rem = divmod_poly(work, [-r, Fraction(1)])
            if rem:
                break
            work = q
            found.append(r)
    quads = []
    if degree(work) == 2:
        c0, c1, c2 = (list(work) + [Fraction(0)] * 3)[:3]
        b = c1 / c2
        c = c0 / c2
        if sqrt_fraction(b * b - 4 * c) is None:
            quads.append((b, c))
            work = [work[-1]]
    unresolved = work if degree(work) >= 1 else []
    return found, quads, unresolved
