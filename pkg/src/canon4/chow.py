"""Chow forms of sextic space cycles in Plucker coordinates.

A line in P^3 spanned by points a, b has Plucker coordinates
p_ij = a_i b_j - a_j b_i (0-indexed against the curve coordinates
x1..x4).  The Chow form of a (2,3) curve is the resultant of the two
defining forms pulled back to the line s.a + u.b, rewritten as a
degree-6 polynomial in the six p_ij and reduced modulo the single
Plucker relation.  Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .domains import QQ
from .linalg import solve_linear
from .multipoly import MultiPoly
from .resultants import resultant_binary
from .scheme import CURVE_VARS

PLUCKER_VARS = ("p01", "p02", "p03", "p12", "p13", "p23")
PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

_LINE_VARS = ("s", "u", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4")
_AB_VARS = ("a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4")


def plucker_relation():
    """The quadric cutting out the Grassmannian of lines in P^3."""
    return MultiPoly.parse("p01*p23-p02*p13+p03*p12", PLUCKER_VARS, QQ)


def reduce_mod_plucker(poly):
    """Normal form modulo the Plucker relation.

    Graded-lex reduction with p01*p23 as the leading term of the
    relation, so no monomial of the result is divisible by p01*p23.
    """
    rel = plucker_relation()
    cur = poly
    while True:
        hit = None
        for e, c in cur.terms.items():
            if e[0] >= 1 and e[5] >= 1:
                hit = (e, c)
                break
        if hit is None:
            return cur
        e, c = hit
        rest = tuple(v - 1 if k in (0, 5) else v for k, v in enumerate(e))
        cur = cur - rel * MultiPoly(QQ, PLUCKER_VARS, {rest: c})


@dataclass(frozen=True)
class ChowForm:
    """A degree-6 form in the six Plucker coordinates, in normal form.

    Vanishes at the Plucker point of a line exactly when the line
    meets the underlying cycle.
    """

    poly: MultiPoly

    @property
    def degree(self):
        return max(sum(e) for e in self.poly.terms)

    def value_at_line(self, a, b):
        """Evaluate at the line spanned by two points of P^3."""
        a = [Fraction(v) for v in a]
        b = [Fraction(v) for v in b]
        coords = {}
        for var, (i, j) in zip(PLUCKER_VARS, PLUCKER_PAIRS):
            coords[var] = a[i] * b[j] - a[j] * b[i]
        if all(v == 0 for v in coords.values()):
            raise ValueError("the two points do not span a line")
        total = Fraction(0)
        for e, c in self.poly.terms.items():
            term = Fraction(c)
            for k, exp in enumerate(e):
                term *= coords[PLUCKER_VARS[k]] ** exp
            total += term
        return total

    def meets_line(self, a, b):
        return self.value_at_line(a, b) == 0

    def to_wire(self):
        return {"vars": list(PLUCKER_VARS), "poly": self.poly.to_wire()}

    @classmethod
    def from_wire(cls, data):
        return cls(MultiPoly.from_wire(data["poly"]))


def _monomials(total, nvars):
    """Exponent tuples of the given total degree."""
    if nvars == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _monomials(total - head, nvars - 1):
            yield (head,) + rest


def _content(exp):
    """How often each of the four point coordinates occurs in a
    Plucker monomial."""
    c = [0, 0, 0, 0]
    for e, (i, j) in zip(exp, PLUCKER_PAIRS):
        c[i] += e
        c[j] += e
    return tuple(c)


def _expand_plucker_monomial(exp):
    """The (a,b)-polynomial a given Plucker monomial represents."""
    out = MultiPoly.constant(1, _AB_VARS, QQ)
    for e, (i, j) in zip(exp, PLUCKER_PAIRS):
        if not e:
            continue
        pij = MultiPoly.parse(
            f"a{i + 1}*b{j + 1}-a{j + 1}*b{i + 1}", _AB_VARS, QQ
        )
        out = out * pij ** e
    return out


def _ab_content(exp8):
    return tuple(exp8[k] + exp8[4 + k] for k in range(4))


def to_plucker(R):
    """Rewrite a bidegree-(d,d) form in (a,b) as a Plucker polynomial.

    Solves, content class by content class, for the unique coordinates
    in the normal basis (monomials not divisible by p01*p23); raises if
    the input is not a polynomial in the p_ij at all.
    """
    if not R.terms:
        return MultiPoly(QQ, PLUCKER_VARS, {})
    degs = {sum(e) for e in R.terms}
    if len(degs) != 1 or degs.pop() % 2:
        raise ValueError("expected a form of even total degree in (a,b)")
    d = sum(next(iter(R.terms))) // 2

    basis = [
        e for e in _monomials(d, 6) if not (e[0] >= 1 and e[5] >= 1)
    ]
    by_content = {}
    for e in basis:
        by_content.setdefault(_content(e), []).append(e)

    rhs_by_content = {}
    for e8, c in R.terms.items():
        rhs_by_content.setdefault(_ab_content(e8), {})[e8] = c

    result = {}
    for content, rhs in rhs_by_content.items():
        mons = by_content.get(content, [])
        if not mons:
            raise ValueError("support outside the Plucker algebra")
        expansions = [_expand_plucker_monomial(m) for m in mons]
        rows_keys = sorted(set(rhs) | {e for ex in expansions for e in ex.terms})
        A = [
            [Fraction(ex.terms.get(k, QQ.zero)) for ex in expansions]
            for k in rows_keys
        ]
        b = [Fraction(rhs.get(k, QQ.zero)) for k in rows_keys]
        sol = solve_linear(A, b)
        if sol is None:
            raise ValueError("support outside the Plucker algebra")
        for m, coef in zip(mons, sol):
            if coef:
                result[m] = QQ.coerce(coef)
    return MultiPoly(QQ, PLUCKER_VARS, result)


def chow_form(scheme):
    """Chow form of a (2,3) complete intersection curve.

    The incidence resultant Res_(s,u)(q(sa+ub), f(sa+ub)) is a
    bidegree-(6,6) form in the two spanning points; it descends to a
    degree-6 polynomial in the Plucker coordinates, returned in normal
    form modulo the Plucker relation.
    """
    if not scheme.is_complete_intersection():
        raise ValueError("the quadric and cubic share a component")
    images = {
        f"x{k}": MultiPoly.parse(f"s*a{k}+u*b{k}", _LINE_VARS, QQ)
        for k in range(1, 5)
    }
    qL = scheme.q.substitute(images)
    fL = scheme.f.substitute(images)
    R = resultant_binary(qL, fL, "s", "u")
    return ChowForm(reduce_mod_plucker(to_plucker(R)))


def plane_curve_chow_form(ell, g):
    """Chow form of a plane curve, as a cycle in P^3.

    ``ell`` is the linear form cutting the plane and ``g`` a form of
    degree d cutting the curve inside it.  A line L meets the plane at
    the point ell(b).a - ell(a).b, whose coordinates are linear in the
    Plucker coordinates of L; feeding them to g gives the degree-d
    Chow form.  The answer only depends on g modulo ell.
    """
    lc = [QQ.coerce(0)] * 4
    for e, c in ell.terms.items():
        if sum(e) != 1:
            raise ValueError("plane must be cut by a linear form")
        lc[e.index(1)] = c
    point = []
    for k in range(4):
        coeffs = {}
        for i in range(4):
            if i == k or not lc[i]:
                continue
            if i < k:
                idx = PLUCKER_PAIRS.index((i, k))
                coeffs[tuple(1 if t == idx else 0 for t in range(6))] = -lc[i]
            else:
                idx = PLUCKER_PAIRS.index((k, i))
                coeffs[tuple(1 if t == idx else 0 for t in range(6))] = lc[i]
        point.append(MultiPoly(QQ, PLUCKER_VARS, coeffs))
    images = {v: img for v, img in zip(CURVE_VARS, point)}
    R = g.substitute(images)
    return ChowForm(reduce_mod_plucker(R))


def _weight_levels(poly, pw):
    levels = {}
    for e, c in poly.terms.items():
        lam = sum(ei * wi for ei, wi in zip(e, pw))
        levels.setdefault(lam, {})[e] = c
    return {
        lam: MultiPoly(QQ, PLUCKER_VARS, terms) for lam, terms in levels.items()
    }


def _divisible_by_relation(poly):
    """Whether the Plucker relation divides the polynomial exactly."""
    rel = plucker_relation()
    cur = poly
    while cur.terms:
        # reduce by the relation's leading term p01*p23
        hit = None
        for e in sorted(cur.terms, key=lambda t: (sum(t), t), reverse=True):
            if e[0] >= 1 and e[5] >= 1:
                hit = e
                break
        if hit is None:
            return False
        c = cur.terms[hit]
        rest = tuple(
            v - 1 if k in (0, 5) else v for k, v in enumerate(hit)
        )
        cur = cur - rel * MultiPoly(QQ, PLUCKER_VARS, {rest: c})
    return True


def chow_weight_min(chow, w):
    """Least support weight of the Chow form under a curve-side 1-PS.

    ``w`` is a sum-zero weight vector on the four curve coordinates;
    the Plucker variable p_ij weighs w_i + w_j.  Because the Plucker
    relation is weight-homogeneous of weight zero for sum-zero w,
    adding multiples of it moves support only within a weight level, so
    the representative-independent minimum is the least level whose
    component is not itself a multiple of the relation.
    """
    poly = chow.poly if isinstance(chow, ChowForm) else chow
    if hasattr(w, "sum_zero"):
        w = w.sum_zero().weights
    w = tuple(w)
    if len(w) != 4:
        raise ValueError("expected a weight vector on the four curve coordinates")
    if sum(w) != 0:
        raise ValueError("weights must sum to zero")
    if not poly.terms:
        raise ValueError("zero polynomial has no support")
    pw = [w[i] + w[j] for i, j in PLUCKER_PAIRS]
    levels = _weight_levels(poly, pw)
    for lam in sorted(levels):
        if not _divisible_by_relation(levels[lam]):
            return lam
    raise ValueError("polynomial is a multiple of the Plucker relation")

@dataclass(frozen=True)
class ChowCertificate:
    """A curve-side 1-PS giving the Chow form strictly positive weight."""

    w: tuple
    min_weight: object

    def to_wire(self):
        return {"w": list(self.w), "min_weight": str(self.min_weight)}


def chow_destabilize(chow):
    """Search the standard torus for a destabilizing 1-PS of a cycle.

    Solves for a sum-zero weight vector on the curve coordinates that
    gives every monomial of the Chow form weight at least 1; feasible
    solutions are scaled to primitive integer weights and rechecked
    against the representative-independent minimum.  Conjugate frames
    are handled upstream by transforming the scheme before taking its
    Chow form.  Returns None when the standard torus has no
    certificate.
    """
    from .lp import feasible_point
    from .linalg import primitive_vector

    poly = chow.poly if isinstance(chow, ChowForm) else chow
    if not poly.terms:
        raise ValueError("zero polynomial has no Chow certificate")
    contents = sorted({_content(e) for e in poly.terms})
    cons = [([1, 1, 1, 1], "==", 0)]
    cons.extend((list(c), ">=", 1) for c in contents)
    sol = feasible_point(cons, 4)
    if sol is None:
        return None
    w = primitive_vector(sol)
    lead = next(x for x in sol if x)
    if (lead > 0) != (next(x for x in w if x) > 0):
        w = [-x for x in w]
    w = tuple(w)
    m = chow_weight_min(poly, w)
    assert m >= 1, "certificate failed recheck"
    return ChowCertificate(w, m)
