"""Vectorized point scans over P^3(F_p).

Candidate singular points come from exact local analysis; these scans
provide the completeness side: enumerate every F_p-point of projective
space (in leading-coefficient-one normal form), evaluate the defining
equations and Jacobian minors mod p, and compare against the reductions
of the exact points.  Everything is int64 arithmetic with a reduction
after each product, so no overflow is possible for the primes in use.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .domains import QuadExtElement


class PrimeUnusable(ValueError):
    """The chosen prime divides a denominator or leading structure."""


@lru_cache(maxsize=6)
def projective_points(p: int, ncoords: int) -> np.ndarray:
    """All points of P^(ncoords-1)(F_p), one row each, first nonzero coord 1."""
    blocks = []
    for lead in range(ncoords):
        free = ncoords - lead - 1
        count = p ** free
        block = np.zeros((count, ncoords), dtype=np.int64)
        block[:, lead] = 1
        if free:
            grid = np.indices((p,) * free).reshape(free, -1).T
            block[:, lead + 1:] = grid
        blocks.append(block)
    return np.concatenate(blocks, axis=0)


def _coeff_mod(c: Fraction, p: int) -> int:
    num = c.numerator % p
    den = c.denominator % p
    if den == 0:
        raise PrimeUnusable(f"denominator divisible by {p}")
    return (num * pow(den, -1, p)) % p


def eval_mod(F, X: np.ndarray, p: int) -> np.ndarray:
    """Evaluate a rational-coefficient MultiPoly on rows of X, mod p."""
    acc = np.zeros(len(X), dtype=np.int64)
    for e, c in F.terms.items():
        cm = _coeff_mod(c, p)
        if cm == 0:
            continue
        t = np.full(len(X), cm, dtype=np.int64)
        for i, exp in enumerate(e):
            for _ in range(exp):
                t = (t * X[:, i]) % p
        acc = (acc + t) % p
    return acc


def curve_singular_points(scheme, p: int):
    """Set of F_p singular points of the (2,3) scheme, normalized tuples.

    A point is singular when it lies on both hypersurfaces and the 2x4
    Jacobian has rank <= 1 (all six 2x2 minors vanish).
    """
    X = projective_points(p, 4)
    on = (eval_mod(scheme.q, X, p) == 0) & (eval_mod(scheme.f, X, p) == 0)
    Y = X[on]
    if len(Y) == 0:
        return set()
    gq = [eval_mod(scheme.q.partial(v), Y, p) for v in scheme.q.vars]
    gf = [eval_mod(scheme.f.partial(v), Y, p) for v in scheme.f.vars]
    sing = np.ones(len(Y), dtype=bool)
    for i in range(4):
        for j in range(i + 1, 4):
            sing &= ((gq[i] * gf[j] - gq[j] * gf[i]) % p) == 0
    return {tuple(int(x) for x in row) for row in Y[sing]}


def cubic_offpoint_singular_data(scheme, p: int):
    """Count singular points of X = x0*q + f away from (1:0:0:0:0), mod p.

    Works fiberwise over the projection to P^3: above a point y with
    q(y) = 0 and grad q(y) != 0 there is exactly one singular point of X
    when the Jacobian minors of (q, f) vanish at y, and none otherwise.
    Returns a dict with the count, a flag for positive-dimensional
    singular locus (grad q = grad f = 0 somewhere on the base), and the
    number of curve-singular points invisible from the cubic side
    (grad q = 0 but grad f != 0).
    """
    X = projective_points(p, 4)
    on_q = eval_mod(scheme.q, X, p) == 0
    Y = X[on_q]
    gq = [eval_mod(scheme.q.partial(v), Y, p) for v in scheme.q.vars]
    gf = [eval_mod(scheme.f.partial(v), Y, p) for v in scheme.f.vars]
    minors_zero = np.ones(len(Y), dtype=bool)
    for i in range(4):
        for j in range(i + 1, 4):
            minors_zero &= ((gq[i] * gf[j] - gq[j] * gf[i]) % p) == 0
    gq_zero = np.ones(len(Y), dtype=bool)
    for i in range(4):
        gq_zero &= gq[i] == 0
    gf_zero = np.ones(len(Y), dtype=bool)
    for i in range(4):
        gf_zero &= gf[i] == 0
    on_f = eval_mod(scheme.f, Y, p) == 0
    return {
        "count": int(np.count_nonzero(minors_zero & ~gq_zero)),
        "nonisolated": bool(np.any(gq_zero & gf_zero)),
        "curve_only": int(np.count_nonzero(gq_zero & ~gf_zero & on_f)),
    }


def _sqrt_mod(a: int, p: int):
    """A square root of a mod p, or None when a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    for r in range(1, p):
        if (r * r) % p == a:
            return r
    return None


def reduce_point_mod_p(point, p: int):
    """Reductions of an exact projective point to P^3(F_p), normalized.

    Rational coordinates give one point (PrimeUnusable when p divides a
    denominator).  Coordinates in a quadratic extension give one point
    per F_p-root of the defining polynomial: two, one, or none.
    """
    ext = next((c for c in point if isinstance(c, QuadExtElement)), None)
    if ext is None:
        coords = [Fraction(c) for c in point]
        vals = [_coeff_mod(c, p) for c in coords]
        return [_normalize(vals, p)]
    K = ext.field
    b = _coeff_mod(Fraction(K.b), p)
    c = _coeff_mod(Fraction(K.c), p)
    disc = (b * b - 4 * c) % p
    s = _sqrt_mod(disc, p)
    if s is None:
        return []
    inv2 = pow(2, -1, p)
    roots = {((-b + s) * inv2) % p, ((-b - s) * inv2) % p}
    out = []
    for r in sorted(roots):
        vals = []
        for co in point:
            if isinstance(co, QuadExtElement):
                vals.append((_coeff_mod(co.a0, p) + _coeff_mod(co.a1, p) * r) % p)
            else:
                vals.append(_coeff_mod(Fraction(co), p))
        out.append(_normalize(vals, p))
    return out


def _normalize(vals, p):
    lead = next((v for v in vals if v % p != 0), None)
    if lead is None:
        raise ValueError("zero vector does not define a projective point")
    inv = pow(lead, -1, p)
    return tuple((v * inv) % p for v in vals)
