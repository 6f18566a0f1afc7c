"""Truncated power series and polynomial jets.

Local singularity analysis needs two things: honest truncated series in
one or two variables (the public :class:`TruncatedSeries`), and the same
truncate-after-every-product arithmetic on polynomials in up to four
variables (the jet helpers), which the hypersurface-point classifier
uses.  Both keep exact coefficients; an order-J object knows its terms up
to total degree J and nothing beyond.
"""

from __future__ import annotations

from .domains import QQ
from .multipoly import MultiPoly

DEFAULT_ORDER = 16


class SeriesError(ArithmeticError):
    pass


def poly_substitute_truncated(F: MultiPoly, images: dict, order: int) -> MultiPoly:
    """Substitute polynomials for variables, truncating at total degree ``order``.

    Every variable of F needs an image; images share one variable tuple
    and domain.  Products are truncated as they are formed, so the cost
    stays bounded even for high-degree inputs.
    """
    sample = next(iter(images.values()))
    tvars, tdom = sample.vars, sample.dom
    for v in F.vars:
        if v not in images:
            raise ValueError(f"no image supplied for {v}")
        img = images[v]
        if img.vars != tvars or img.dom != tdom:
            raise ValueError("images disagree on variables or domain")
    maxdeg = {v: 0 for v in F.vars}
    for e in F.terms:
        for v, x in zip(F.vars, e):
            maxdeg[v] = max(maxdeg[v], x)
    powers = {}
    for v in F.vars:
        row = [MultiPoly.constant(1, tvars, tdom)]
        for _ in range(maxdeg[v]):
            row.append((row[-1] * images[v]).truncate(order))
        powers[v] = row
    acc = MultiPoly.zero(tvars, tdom)
    for e, c in F.terms.items():
        t = MultiPoly.constant(c, tvars, tdom)
        for v, x in zip(F.vars, e):
            if x:
                t = (t * powers[v][x]).truncate(order)
                if not t:
                    break
        acc = acc + t
    return acc.truncate(order)


def poly_implicit_solve(F: MultiPoly, solve_var: str, order: int = DEFAULT_ORDER) -> MultiPoly:
    """Solve F(z, rest) = 0 for z = phi(rest) as a jet of the given order.

    Requires F(0) = 0 and dF/dz(0) != 0 (the implicit function theorem
    hypothesis); returns phi with phi(0) = 0 as a polynomial in the
    remaining variables, truncated at total degree ``order``, with
    F(phi, rest) = 0 modulo degree order+1.
    """
    zi = F.vars.index(solve_var)
    zero_pt = [0] * len(F.vars)
    if F.evaluate(zero_pt) != F.dom.zero:
        raise SeriesError("implicit solve needs F(0) = 0")
    c = F.partial(solve_var).evaluate(zero_pt)
    if not c:
        raise SeriesError(f"dF/d{solve_var}(0) = 0: implicit function theorem fails")
    rest_vars = tuple(v for v in F.vars if v != solve_var)
    phi = MultiPoly.zero(rest_vars, F.dom)
    identity = {v: MultiPoly.variable(v, rest_vars, F.dom) for v in rest_vars}
    for _ in range(order + 1):
        images = dict(identity)
        images[solve_var] = phi
        val = poly_substitute_truncated(F, images, order)
        if not val:
            break
        phi = (phi - val / c).truncate(order)
    else:
        images = dict(identity)
        images[solve_var] = phi
        val = poly_substitute_truncated(F, images, order)
        if val:
            raise SeriesError("implicit solve failed to converge")
    return phi


class TruncatedSeries:
    """A power series in one or two variables known modulo degree order+1."""

    __slots__ = ("poly", "order")

    def __init__(self, poly: MultiPoly, order: int = DEFAULT_ORDER):
        if len(poly.vars) not in (1, 2):
            raise ValueError("series support one or two variables")
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.poly = poly.truncate(order)
        self.order = order

    @classmethod
    def from_poly(cls, poly, order=DEFAULT_ORDER):
        return cls(poly, order)

    @classmethod
    def zero(cls, vars, order=DEFAULT_ORDER, dom=QQ):
        return cls(MultiPoly.zero(vars, dom), order)

    @classmethod
    def variable(cls, name, vars, order=DEFAULT_ORDER, dom=QQ):
        return cls(MultiPoly.variable(name, vars, dom), order)

    @property
    def vars(self):
        return self.poly.vars

    @property
    def dom(self):
        return self.poly.dom

    def is_zero(self):
        """True when every known coefficient vanishes (up to the order)."""
        return self.poly.is_zero()

    def valuation(self):
        """Total degree of the lowest nonzero term; None if none is known."""
        if not self.poly.terms:
            return None
        return min(sum(e) for e in self.poly.terms)

    def _sync(self, other):
        if isinstance(other, TruncatedSeries):
            return other, min(self.order, other.order)
        return TruncatedSeries(MultiPoly.constant(other, self.vars, self.dom), self.order), self.order

    def __add__(self, other):
        o, k = self._sync(other)
        return TruncatedSeries((self.poly + o.poly).truncate(k), k)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order)

    def __sub__(self, other):
        o, k = self._sync(other)
        return TruncatedSeries((self.poly - o.poly).truncate(k), k)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o, k = self._sync(other)
        return TruncatedSeries((self.poly * o.poly).truncate(k), k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, self.order))

    def coefficient(self, e):
        return self.poly.coefficient(e)

    def compose_into(self, F: MultiPoly, var_map: dict):
        """Evaluate the polynomial F with series plugged in for its variables."""
        images = {v: s.poly for v, s in var_map.items()}
        return TruncatedSeries(
            poly_substitute_truncated(F, images, self.order), self.order
        )

    def __str__(self):
        inside = str(self.poly)
        return f"{inside} + O(deg {self.order + 1})"

    __repr__ = __str__


def series_implicit_solve(F: MultiPoly, solve_var: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Implicit-function solve, packaged as a TruncatedSeries.

    F lives in two or three variables (the unknown plus one or two
    parameters); see :func:`poly_implicit_solve` for the hypotheses.
    """
    if len(F.vars) not in (2, 3):
        raise ValueError("expected the unknown plus one or two parameters")
    phi = poly_implicit_solve(F, solve_var, order)
    return TruncatedSeries(phi, order)
