"""Immutable multivariate polynomials over an exact coefficient field.

Terms are stored sparsely as a map from exponent tuples to nonzero
coefficients.  The canonical term order everywhere is *graded
lexicographic*: compare total degree first, then the exponent tuple
lexicographically, larger first.  Printing, JSON serialization, leading
terms and the division algorithm all follow that order, so every textual
or wire representation of a polynomial is deterministic.

The coefficient domain is pluggable (see :mod:`canon4.domains`): the
geometry runs over Q, the occasional conjugate point over a quadratic
extension, and unit tests exercise GF(p) as well.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .domains import QQ, QuadExtElement, RationalField


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact is not."""


def glex_key(e):
    """Sort key realizing graded-lex: higher total degree wins, then lex."""
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("dom", "vars", "terms", "_hash")

    def __init__(self, dom, vars, terms):
        self.dom = dom
        self.vars = tuple(vars)
        clean = {}
        n = len(self.vars)
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent tuple {e} does not match {n} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = dom.coerce(c)
            if c:
                if e in clean:
                    c = clean[e] + c
                    if c:
                        clean[e] = c
                    else:
                        del clean[e]
                else:
                    clean[e] = c
        self.terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, vars, dom=QQ):
        return cls(dom, vars, {})

    @classmethod
    def constant(cls, c, vars, dom=QQ):
        return cls(dom, vars, {tuple(0 for _ in vars): c})

    @classmethod
    def variable(cls, name, vars, dom=QQ):
        vars = tuple(vars)
        if name not in vars:
            raise ValueError(f"{name} not among {vars}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(dom, vars, {e: 1})

    @classmethod
    def parse(cls, text, vars, dom=QQ):
        """Parse an expression like ``"x1^2*x4 - 3/2*x2*x3^2"``.

        Supports + - * / ^ (also ``**``), integer and ``p/q`` literals,
        parentheses, and the given variable names.  Division is only
        allowed by constant subexpressions.
        """
        return _Parser(text, tuple(vars), dom).parse()

    # ------------------------------------------------------------------
    # bookkeeping

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        """Total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self, d=None):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def sorted_terms(self):
        """Terms in descending graded-lex order as (exponent, coeff) pairs."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=glex_key, reverse=True)]

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=glex_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.dom.zero)

    def __len__(self):
        return len(self.terms)

    # ------------------------------------------------------------------
    # arithmetic

    def _check_compatible(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
        if self.dom != other.dom:
            raise ValueError("coefficient domain mismatch")

    def _coerce_operand(self, other):
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            return other
        try:
            c = self.dom.coerce(other)
        except (TypeError, ValueError):
            return None
        return MultiPoly.constant(c, self.vars, self.dom)

    def __add__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e, self.dom.zero) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly(self.dom, self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.dom, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        out = {}
        zero = self.dom.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, zero) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.dom, self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return NotImplemented
        c = self.dom.coerce(other)
        if not c:
            raise ZeroDivisionError("division by zero constant")
        return MultiPoly(self.dom, self.vars, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1, self.vars, self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = self.dom.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
            other = MultiPoly.constant(c, self.vars, self.dom)
        return self.vars == other.vars and self.dom == other.dom and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # calculus and substitution

    def partial(self, name):
        """Formal partial derivative with respect to the named variable."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return MultiPoly(self.dom, self.vars, out)

    def gradient(self):
        return tuple(self.partial(v) for v in self.vars)

    def evaluate(self, values):
        """Evaluate at a point given as a sequence of coercible scalars."""
        if len(values) != len(self.vars):
            raise ValueError("wrong number of coordinates")
        vals = [self.dom.coerce(v) for v in values]
        maxdeg = [0] * len(self.vars)
        for e in self.terms:
            for i, x in enumerate(e):
                maxdeg[i] = max(maxdeg[i], x)
        powers = []
        for i, v in enumerate(vals):
            row = [self.dom.one]
            for _ in range(maxdeg[i]):
                row.append(row[-1] * v)
            powers.append(row)
        acc = self.dom.zero
        for e, c in self.terms.items():
            t = c
            for i, x in enumerate(e):
                if x:
                    t = t * powers[i][x]
            acc = acc + t
        return acc

    def substitute(self, images):
        """Substitute polynomials for variables.

        ``images`` maps variable names to MultiPoly values; every image
        must share one domain and variable tuple, which become those of
        the result.  Variables without an image must exist by name in the
        image variable tuple and are substituted identically.
        """
        if not images:
            return self
        sample = next(iter(images.values()))
        tvars, tdom = sample.vars, sample.dom
        full = {}
        for v in self.vars:
            if v in images:
                img = images[v]
                if img.vars != tvars or img.dom != tdom:
                    raise ValueError("substitution images disagree on variables or domain")
                full[v] = img
            else:
                full[v] = MultiPoly.variable(v, tvars, tdom)
        maxdeg = {v: 0 for v in self.vars}
        for e in self.terms:
            for v, x in zip(self.vars, e):
                maxdeg[v] = max(maxdeg[v], x)
        powers = {}
        for v in self.vars:
            row = [MultiPoly.constant(1, tvars, tdom)]
            for _ in range(maxdeg[v]):
                row.append(row[-1] * full[v])
            powers[v] = row
        acc = MultiPoly.zero(tvars, tdom)
        for e, c in self.terms.items():
            t = MultiPoly.constant(tdom.coerce(c) if tdom == self.dom else c, tvars, tdom)
            for v, x in zip(self.vars, e):
                if x:
                    t = t * powers[v][x]
            acc = acc + t
        return acc

    def substitute_linear(self, matrix, new_vars=None, dom=None):
        """Apply the linear change x_i = sum_j M[i][j] * y_j.

        ``matrix`` has one row per current variable; its width sets the
        number of new variables (default names: the old ones when the
        shape is square, else y0, y1, ...).
        """
        n = len(self.vars)
        if len(matrix) != n:
            raise ValueError("matrix must have one row per variable")
        m = len(matrix[0])
        if any(len(r) != m for r in matrix):
            raise ValueError("ragged matrix")
        dom = dom or self.dom
        if new_vars is None:
            new_vars = self.vars if m == n else tuple(f"y{j}" for j in range(m))
        images = {}
        for i, v in enumerate(self.vars):
            terms = {}
            for j in range(m):
                c = dom.coerce(matrix[i][j])
                if c:
                    e = tuple(1 if k == j else 0 for k in range(m))
                    terms[e] = c
            images[v] = MultiPoly(dom, new_vars, terms)
        return self.substitute(images)

    def change_domain(self, dom):
        return MultiPoly(dom, self.vars, {e: dom.coerce(c) for e, c in self.terms.items()})

    def with_vars(self, new_vars):
        """Reinterpret in a larger (or reordered) variable tuple by name."""
        new_vars = tuple(new_vars)
        pos = []
        for v in self.vars:
            if v not in new_vars:
                raise ValueError(f"variable {v} missing from {new_vars}")
            pos.append(new_vars.index(v))
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(new_vars)
            for p, x in zip(pos, e):
                e2[p] = x
            terms[tuple(e2)] = c
        return MultiPoly(self.dom, new_vars, terms)

    def drop_vars(self, names):
        """Forget variables that the polynomial does not actually use."""
        names = set(names)
        for e in self.terms:
            for v, x in zip(self.vars, e):
                if v in names and x:
                    raise ValueError(f"polynomial uses {v}")
        keep = [i for i, v in enumerate(self.vars) if v not in names]
        new_vars = tuple(self.vars[i] for i in keep)
        terms = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        return MultiPoly(self.dom, new_vars, terms)

    def truncate(self, max_total_degree):
        """Discard all terms of total degree above the bound (jet truncation)."""
        return MultiPoly(
            self.dom,
            self.vars,
            {e: c for e, c in self.terms.items() if sum(e) <= max_total_degree},
        )

    def homogeneous_component(self, d):
        return MultiPoly(self.dom, self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    # ------------------------------------------------------------------
    # division

    def exact_div(self, g):
        """Exact quotient self / g; raises ExactDivisionError otherwise."""
        q, r = self.divmod_poly(g)
        if r:
            raise ExactDivisionError("division left a nonzero remainder")
        return q

    def divmod_poly(self, g):
        """Division with remainder by a single divisor in graded-lex order.

        Since one polynomial is a Groebner basis of the ideal it generates,
        the remainder is zero exactly when self lies in (g).
        """
        if isinstance(g, MultiPoly):
            self._check_compatible(g)
        else:
            g = MultiPoly.constant(self.dom.coerce(g), self.vars, self.dom)
        if not g.terms:
            raise ZeroDivisionError("polynomial division by zero")
        ge, gc = g.leading_term()
        quot = {}
        rem = {}
        work = dict(self.terms)
        while work:
            e = max(work, key=glex_key)
            c = work.pop(e)
            if all(a >= b for a, b in zip(e, ge)):
                me = tuple(a - b for a, b in zip(e, ge))
                mc = c / gc
                quot[me] = quot.get(me, self.dom.zero) + mc
                for e2, c2 in g.terms.items():
                    if e2 == ge:
                        continue
                    key = tuple(a + b for a, b in zip(me, e2))
                    s = work.get(key, self.dom.zero) - mc * c2
                    if s:
                        work[key] = s
                    else:
                        work.pop(key, None)
            else:
                rem[e] = c
        return (
            MultiPoly(self.dom, self.vars, quot),
            MultiPoly(self.dom, self.vars, rem),
        )

    def monic(self):
        if not self.terms:
            return self
        return self / self.leading_coefficient()

    def content(self):
        """Positive rational c with self/c integral and primitive (Q only)."""
        if not isinstance(self.dom, RationalField):
            raise TypeError("content is defined over Q")
        if not self.terms:
            return Fraction(0)
        from math import gcd, lcm

        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Integer-coefficient scalar multiple with content 1 and positive lead."""
        if not self.terms:
            return self
        p = self / self.content()
        if p.leading_coefficient() < 0:
            p = -p
        return p

    # ------------------------------------------------------------------
    # wire format

    def to_wire(self):
        """JSON-ready dict; terms in descending graded-lex order."""
        if not isinstance(self.dom, RationalField):
            raise TypeError("wire format carries rational polynomials only")
        return {
            "vars": list(self.vars),
            "terms": [{"c": _frac_str(c), "e": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_wire(cls, obj, dom=QQ):
        vars = tuple(obj["vars"])
        terms = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["e"])
            terms[e] = terms.get(e, Fraction(0)) + Fraction(t["c"])
        return cls(dom, vars, terms)

    def to_json(self):
        return json.dumps(self.to_wire(), sort_keys=True)

    @classmethod
    def from_json(cls, s, dom=QQ):
        return cls.from_wire(json.loads(s), dom)

    # ------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{x}" if x > 1 else v for v, x in zip(self.vars, e) if x
            )
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                cs = str(c)
                if not isinstance(c, (int, Fraction)) and " " in cs:
                    cs = f"({cs})"
                piece = f"{cs}*{mono}"
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_TOKEN = re.compile(r"\s*(\*\*|[()+\-*/^]|\d+|[A-Za-z_][A-Za-z_0-9]*)")


class _Parser:
    def __init__(self, text, vars, dom):
        self.vars = vars
        self.dom = dom
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"bad character in polynomial at: {text[pos:pos+10]!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        p = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing tokens from {self.peek()!r}")
        return p

    def expr(self):
        if self.peek() == "-":
            self.next()
            acc = -self.term()
        else:
            if self.peek() == "+":
                self.next()
            acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            f = self.factor()
            if op == "*":
                acc = acc * f
            else:
                if f.total_degree() > 0:
                    raise ValueError("division only by constants")
                acc = acc / f.coefficient((0,) * len(self.vars))
        return acc

    def factor(self):
        if self.peek() == "-":
            self.next()
            return -self.factor()
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.next()
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer literal")
            return base ** int(tok)
        return base

    def atom(self):
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok == "(":
            p = self.expr()
            if self.next() != ")":
                raise ValueError("unbalanced parentheses")
            return p
        if tok.isdigit():
            return MultiPoly.constant(int(tok), self.vars, self.dom)
        if tok in self.vars:
            return MultiPoly.variable(tok, self.vars, self.dom)
        raise ValueError(f"unknown symbol {tok!r}")
