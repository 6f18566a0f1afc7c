"""The (2,3) complete-intersection scheme in P^3 and its canonical form.

A genus-4 canonical curve is cut out by one quadric q and one cubic f in
P^3.  The pair (q, f) is only well defined up to rescaling and up to
adding linear multiples of q to f, so this module fixes a canonical
representative: q is made monic in graded-lex order, and f is reduced
modulo the span of x_i * q and then made monic.  Two schemes are equal
exactly when their canonical pairs agree.

The quadric's Gram matrix, rank and kernel (the singular locus of the
quadric, when it degenerates) are computed here as well, together with
an exact factorization of rank <= 2 quadrics into linear forms, which
may require a quadratic extension of Q.
"""

from __future__ import annotations

from fractions import Fraction

from .domains import QQ, QuadExtField, sqrt_fraction
from .linalg import nullspace, primitive_vector, rank as mat_rank, rref
from .multipoly import MultiPoly

CURVE_VARS = ("x1", "x2", "x3", "x4")


class SchemeError(ValueError):
    pass


def _monomials(vars, degree):
    """All exponent tuples of the given total degree, graded-lex descending."""
    n = len(vars)

    def rec(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for a in range(remaining, -1, -1):
            yield from rec(prefix + (a,), remaining - a, slots - 1)

    return sorted(rec((), degree, n), key=lambda e: (sum(e), e), reverse=True)


class TwoThreeScheme:
    """Intersection of a quadric and a cubic surface in P^3, canonicalized."""

    __slots__ = ("q", "f", "_gram")

    def __init__(self, q: MultiPoly, f: MultiPoly):
        if q.vars != CURVE_VARS or f.vars != CURVE_VARS:
            q = q.with_vars(CURVE_VARS) if set(q.vars) <= set(CURVE_VARS) else q
            f = f.with_vars(CURVE_VARS) if set(f.vars) <= set(CURVE_VARS) else f
        if q.vars != CURVE_VARS or f.vars != CURVE_VARS:
            raise SchemeError(f"scheme polynomials must use variables {CURVE_VARS}")
        if q.dom != QQ or f.dom != QQ:
            raise SchemeError("scheme equations must have rational coefficients")
        if q.is_zero() or not q.is_homogeneous(2):
            raise SchemeError("q must be a nonzero quadratic form")
        if f.is_zero() or not f.is_homogeneous(3):
            raise SchemeError("f must be a nonzero cubic form")
        q = q.monic()
        f = _reduce_cubic(q, f)
        self.q = q
        self.f = f
        self._gram = None

    @classmethod
    def parse(cls, q_text: str, f_text: str) -> "TwoThreeScheme":
        return cls(
            MultiPoly.parse(q_text, CURVE_VARS),
            MultiPoly.parse(f_text, CURVE_VARS),
        )

    # ------------------------------------------------------------------

    @property
    def gram(self):
        """Symmetic 4x4 Gram matrix with q(x) = x^T G x."""
        if self._gram is None:
            G = [[Fraction(0)] * 4 for _ in range(4)]
            for e, c in self.q.terms.items():
                idx = [i for i, x in enumerate(e) if x]
                if len(idx) == 1:
                    G[idx[0]][idx[0]] = c
                else:
                    i, j = idx
                    G[i][j] = G[j][i] = c / 2
            self._gram = G
        return self._gram

    def quadric_rank(self) -> int:
        return mat_rank(self.gram)

    def quadric_kernel(self):
        """Primitive integer basis of the Gram kernel (empty for rank 4)."""
        return [primitive_vector(v) for v in nullspace(self.gram)]

    def is_complete_intersection(self) -> bool:
        """False when q and f share a component.

        After canonicalization f = 0 catches f in (q); for rank <= 2 the
        quadric splits into linear forms and a shared plane shows up as a
        linear factor dividing f.
        """
        if self.f.is_zero():
            return False
        if self.quadric_rank() <= 2:
            for ell in factor_split_quadric(self.q):
                fe = self.f.change_domain(ell.dom) if ell.dom != QQ else self.f
                if not fe.divmod_poly(ell)[1]:
                    return False
        return True

    def transformed(self, matrix) -> "TwoThreeScheme":
        """Pull back along the linear substitution x = M * y (M rational 4x4)."""
        return TwoThreeScheme(
            self.q.substitute_linear(matrix),
            self.f.substitute_linear(matrix),
        )

    def __eq__(self, other):
        if not isinstance(other, TwoThreeScheme):
            return NotImplemented
        return self.q == other.q and self.f == other.f

    def __hash__(self):
        return hash((self.q, self.f))

    def to_wire(self):
        return {"q": self.q.to_wire(), "f": self.f.to_wire()}

    @classmethod
    def from_wire(cls, obj):
        return cls(MultiPoly.from_wire(obj["q"]), MultiPoly.from_wire(obj["f"]))

    def __repr__(self):
        return f"TwoThreeScheme(q = {self.q}, f = {self.f})"


def _reduce_cubic(q: MultiPoly, f: MultiPoly) -> MultiPoly:
    """Reduce f modulo span{x_i q : i} and rescale monic (canonical residue)."""
    monos = _monomials(CURVE_VARS, 3)
    index = {e: i for i, e in enumerate(monos)}

    def vec(p):
        v = [Fraction(0)] * len(monos)
        for e, c in p.terms.items():
            v[index[e]] = c
        return v

    basis_rows = []
    for i, name in enumerate(CURVE_VARS):
        basis_rows.append(vec(MultiPoly.variable(name, CURVE_VARS) * q))
    R, pivots = rref(basis_rows)
    fv = vec(f)
    for row, pc in zip(R, pivots):
        if fv[pc] != 0:
            coef = fv[pc]
            fv = [a - coef * b for a, b in zip(fv, row)]
    terms = {monos[i]: c for i, c in enumerate(fv) if c}
    red = MultiPoly(QQ, CURVE_VARS, terms)
    return red.monic() if red else red


def gram_matrix(form: MultiPoly):
    """Symmetric Gram matrix of any quadratic form over Q."""
    n = len(form.vars)
    G = [[Fraction(0)] * n for _ in range(n)]
    for e, c in form.terms.items():
        idx = [i for i, x in enumerate(e) if x]
        if len(idx) == 1:
            G[idx[0]][idx[0]] = c
        else:
            i, j = idx
            G[i][j] = G[j][i] = c / 2
    return G


def factor_split_quadric(form: MultiPoly):
    """Factor a quadratic form of rank <= 2 into two linear forms.

    Works in any number of variables (split quadrics in P^3, degenerate
    conics in a plane).  The two factors multiply back to the form
    exactly; they are rational when the discriminant of the induced
    binary form is a square and lie in a quadratic extension otherwise.
    Rank-1 forms return a repeated factor; rank >= 3 raises.
    """
    if not form.is_homogeneous(2) or form.is_zero():
        raise SchemeError("expected a nonzero quadratic form")
    G = gram_matrix(form)
    n = len(form.vars)
    r = mat_rank(G)
    if r > 2:
        raise SchemeError("quadratic form of rank >= 3 does not split")

    def linear_form(coeffs, dom):
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                terms[tuple(1 if t == k else 0 for t in range(n))] = c
        return MultiPoly(dom, form.vars, terms)

    cols = [[G[row][col] for row in range(n)] for col in range(n)]
    if r == 1:
        i = next(k for k in range(n) if cols[k] != [0] * n and G[k][k] != 0)
        a = G[i][i]
        # G = a * v v^T with v = column_i / a, so form = a * (v . x)^2
        v = [G[i][k] / a for k in range(n)]
        ell = linear_form(v, QQ)
        return [ell * a, ell]
    # rank 2: choose transverse coordinates e_i, e_j, express the class of x
    # in the quotient by the kernel through the functionals s(x), t(x) that
    # solve G x = s * G e_i + t * G e_j; then form = a s^2 + b s t + c t^2.
    i = next(k for k in range(n) if any(G[k]))
    gi = cols[i]
    j = next(
        k for k in range(n)
        if k != i and mat_rank([gi, cols[k]]) == 2
    )
    gj = cols[j]
    k1 = next(k for k in range(n) if gi[k] != 0 or gj[k] != 0)
    k2 = next(
        k for k in range(n)
        if det2(gi[k1], gj[k1], gi[k], gj[k]) != 0
    )
    d = det2(gi[k1], gj[k1], gi[k2], gj[k2])
    # s(x) = (gj[k2] (Gx)_{k1} - gj[k1] (Gx)_{k2}) / d, similarly t(x):
    # rows of G give (Gx)_k as explicit linear forms
    row_k1 = G[k1]
    row_k2 = G[k2]
    s_coeffs = [(gj[k2] * row_k1[m] - gj[k1] * row_k2[m]) / d for m in range(n)]
    t_coeffs = [(gi[k1] * row_k2[m] - gi[k2] * row_k1[m]) / d for m in range(n)]
    a, b, c = G[i][i], 2 * G[i][j], G[j][j]
    s_form = linear_form(s_coeffs, QQ)
    t_form = linear_form(t_coeffs, QQ)
    # factor a s^2 + b s t + c t^2
    if a == 0 and c == 0:
        return [s_form * b, t_form]
    if a == 0:
        return [t_form, s_form * b + t_form * c]
    disc = b * b - 4 * a * c
    root = sqrt_fraction(disc)
    if root is not None:
        r1 = (-b + root) / (2 * a)
        r2 = (-b - root) / (2 * a)
        return [(s_form - r1 * t_form) * a, s_form - r2 * t_form]
    K = QuadExtField(Fraction(b, a), Fraction(c, a))
    th = K.gen
    sK = s_form.change_domain(K)
    tK = t_form.change_domain(K)
    return [(sK - tK * th) * K.coerce(a), sK - tK * th.conjugate()]


def det2(a, b, c, d):
    return a * d - b * c
