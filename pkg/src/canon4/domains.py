"""Coefficient domains for exact polynomial arithmetic.

Three fields are supported:

* the rationals, represented by :class:`fractions.Fraction`,
* prime fields GF(p), used by the finite-field scanning layer when it needs
  exact (non-vectorized) arithmetic,
* real or imaginary quadratic extensions Q[t]/(t^2 + b t + c), needed because
  a handful of geometric points in the corpus (conjugate singular points,
  linear factors of rank-2 quadrics) are quadratic-irrational.

A *domain* object knows how to coerce python ints / Fractions into its
element type and exposes ``zero`` and ``one``.  Element classes implement
ordinary field arithmetic; nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class RationalField:
    """The field Q.  Elements are plain ``Fraction`` objects."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, QuadExtElement):
            if x.a1 == 0:
                return x.a0
            raise TypeError("element has a nontrivial quadratic part")
        return _as_fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class GFElement:
    """An element of GF(p), stored as a reduced residue."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        if isinstance(other, Fraction):
            return GFElement(other.numerator, self.p) / GFElement(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return GFElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return GFElement(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return GFElement(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return GFElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class PrimeField:
    """GF(p) for an odd prime p."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, min(p, 1000)) if d * d <= p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise ValueError("mixed characteristics")
            return x
        if isinstance(x, int):
            return GFElement(x, self.p)
        if isinstance(x, Fraction):
            return GFElement(x.numerator, self.p) / GFElement(x.denominator, self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class QuadExtElement:
    """a0 + a1*theta where theta^2 + b*theta + c = 0, a_i rational."""

    __slots__ = ("a0", "a1", "field")

    def __init__(self, a0, a1, field):
        self.a0 = _as_fraction(a0)
        self.a1 = _as_fraction(a1)
        self.field = field

    def _lift(self, other):
        if isinstance(other, QuadExtElement):
            if other.field != self.field:
                raise ValueError("elements of different quadratic extensions")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtElement(other, 0, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.a0 + o.a0, self.a1 + o.a1, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.a0 - o.a0, self.a1 - o.a1, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        # (a0 + a1 t)(b0 + b1 t) with t^2 = -b t - c
        b, c = self.field.b, self.field.c
        cross = self.a1 * o.a1
        return QuadExtElement(
            self.a0 * o.a0 - c * cross,
            self.a0 * o.a1 + self.a1 * o.a0 - b * cross,
            self.field,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = QuadExtElement(Fraction(1), Fraction(0), self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        # theta-bar = -b - theta
        b = self.field.b
        return QuadExtElement(self.a0 - b * self.a1, -self.a1, self.field)

    def norm(self):
        """Field norm down to Q (product with the conjugate)."""
        b, c = self.field.b, self.field.c
        return self.a0 * self.a0 - b * self.a0 * self.a1 + c * self.a1 * self.a1

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        num = self * o.conjugate()
        return QuadExtElement(num.a0 / n, num.a1 / n, self.field)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return QuadExtElement(-self.a0, -self.a1, self.field)

    def __eq__(self, other):
        if isinstance(other, QuadExtElement):
            return self.field == other.field and self.a0 == other.a0 and self.a1 == other.a1
        if isinstance(other, (int, Fraction)):
            return self.a1 == 0 and self.a0 == other
        return NotImplemented

    def __hash__(self):
        if self.a1 == 0:
            return hash(self.a0)
        return hash((self.a0, self.a1, self.field.b, self.field.c))

    def __bool__(self):
        return self.a0 != 0 or self.a1 != 0

    def __repr__(self):
        if self.a1 == 0:
            return str(self.a0)
        return f"({self.a0} + {self.a1}*theta)"


class QuadExtField:
    """Q[theta]/(theta^2 + b*theta + c), b^2 - 4c not a rational square."""

    def __init__(self, b, c):
        self.b = _as_fraction(b)
        self.c = _as_fraction(c)
        disc = self.b * self.b - 4 * self.c
        if disc == 0 or _is_rational_square(disc):
            raise ValueError("defining polynomial is reducible over Q")
        self.name = f"QQ[t]/(t^2 + ({self.b})t + ({self.c}))"
        self.zero = QuadExtElement(0, 0, self)
        self.one = QuadExtElement(1, 0, self)

    @property
    def gen(self):
        return QuadExtElement(0, 1, self)

    def coerce(self, x):
        if isinstance(x, QuadExtElement):
            if x.field != self:
                raise ValueError("element of a different extension")
            return x
        if isinstance(x, (int, Fraction)):
            return QuadExtElement(x, 0, self)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, QuadExtField) and self.b == other.b and self.c == other.c

    def __hash__(self):
        return hash(("QuadExt", self.b, self.c))


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    rn = _isqrt(num)
    rd = _isqrt(den)
    return rn * rn == num and rd * rd == den


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


def sqrt_fraction(q: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = _as_fraction(q)
    if q < 0:
        return None
    rn = _isqrt(q.numerator)
    rd = _isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None
