"""Divisor-class bookkeeping on the parameter space and on moduli.

Two small exact vector spaces: classes on the bundle of cubic forms
over the space of quadrics, written in the (eta, h) or (lambda, delta)
basis, and classes a*lambda - b0*delta0 - b1*delta1 - b2*delta2 on the
genus-4 moduli side.  Everything is plain Fraction arithmetic; the
pencil counts double as an independent Euler-characteristic oracle for
the catalogued constants.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PEClass:
    """A divisor class c_eta * eta + c_h * h."""

    c_eta: Fraction
    c_h: Fraction

    def __add__(self, other):
        return PEClass(self.c_eta + other.c_eta, self.c_h + other.c_h)

    def __sub__(self, other):
        return PEClass(self.c_eta - other.c_eta, self.c_h - other.c_h)

    def scale(self, t):
        t = Fraction(t)
        return PEClass(self.c_eta * t, self.c_h * t)

    def proportional_to(self, other):
        return self.c_eta * other.c_h == self.c_h * other.c_eta

    def pair(self):
        return (self.c_eta, self.c_h)


def _pe(a, b):
    return PEClass(Fraction(a), Fraction(b))


# (eta, h) coordinates of the named classes
K_PE = _pe(-14, -16)
V = _pe(4, 0)
SIGMA = _pe(33, 34)
LAMBDA = _pe(4, 4)
DELTA = _pe(33, 34)

# change of basis: (lambda, delta) = M (eta, h)
_M = ((Fraction(4), Fraction(4)), (Fraction(33), Fraction(34)))
_DET = _M[0][0] * _M[1][1] - _M[0][1] * _M[1][0]
_MINV = ((_M[1][1] / _DET, -_M[0][1] / _DET),
         (-_M[1][0] / _DET, _M[0][0] / _DET))


def pe_constants():
    """The named classes plus the inverted basis relations.

    The inverse expressions of eta and h through lambda and delta come
    out of an exact 2x2 inversion, not a lookup.
    """
    eta_in_ld = (_MINV[0][0], _MINV[0][1])
    h_in_ld = (_MINV[1][0], _MINV[1][1])
    assert eta_in_ld == (Fraction(17, 2), Fraction(-1))
    assert h_in_ld == (Fraction(-33, 4), Fraction(1))
    return {
        "K": K_PE, "V": V, "Sigma": SIGMA, "lambda": LAMBDA, "delta": DELTA,
        "eta_in_lambda_delta": eta_in_ld,
        "h_in_lambda_delta": h_in_ld,
    }


def convert(coeffs, from_basis, to_basis):
    """Exact change of coordinates between (eta,h) and (lambda,delta)."""
    names = {"eta-h", "lambda-delta"}
    if from_basis not in names or to_basis not in names:
        raise ValueError(f"bases must be in {sorted(names)}")
    a, b = (Fraction(coeffs[0]), Fraction(coeffs[1]))
    if from_basis == to_basis:
        return (a, b)
    if from_basis == "eta-h":
        # (l, d) components of a*eta + b*h, i.e. solve (eta,h) = MINV(l,d)
        return (a * _MINV[0][0] + b * _MINV[1][0],
                a * _MINV[0][1] + b * _MINV[1][1])
    return (a * _M[0][0] + b * _M[1][0], a * _M[0][1] + b * _M[1][1])


def pencil_singular_count(config):
    """Singular members of a Lefschetz pencil of curve sections.

    count = e(surface) + #base points - 2 e(generic fiber), with the
    base points recomputed as intersection numbers on the surface and
    e(fiber) = -6 for a genus-4 curve.
    """
    euler_fiber = 2 - 2 * 4
    if config == "fixed_quadric_pencil_of_cubics":
        euler_surface = 4  # smooth quadric
        base_points = 3 * 3 + 3 * 3  # two (3,3) divisors on the quadric
    elif config == "fixed_cubic_pencil_of_quadrics":
        euler_surface = 9  # smooth cubic surface
        base_points = 2 * 2 * 3  # two quadric sections of a cubic
    else:
        raise ValueError(f"unknown pencil configuration {config!r}")
    return euler_surface + base_points - 2 * euler_fiber


@dataclass(frozen=True)
class M4Class:
    """a*lambda - b0*delta0 - b1*delta1 - b2*delta2, exact rationals."""

    a: Fraction
    b0: Fraction
    b1: Fraction
    b2: Fraction

    @classmethod
    def of(cls, a, b0, b1, b2):
        return cls(Fraction(a), Fraction(b0), Fraction(b1), Fraction(b2))


def test_curve_constraints(a=9, b0=1):
    """Pin b1 and b2 from the two standard test families.

    The elliptic-tails family forces a - 12 b0 + b1 = 0.  The genus-2
    pullback b2*w + a*lambda - b0*delta0 - b1*delta1 is then reduced
    modulo 10*lambda = delta0 + 2*delta1 and matched against 3w - lambda
    up to the delta1 ambiguity, which pins b2.  Returns the completed
    class.
    """
    a, b0 = Fraction(a), Fraction(b0)
    b1 = 12 * b0 - a
    # substitute delta0 = 10 lambda - 2 delta1 in the pullback and drop
    # the delta1 component; what is left must be a multiple of 3w - lambda
    lam_coeff = a - 10 * b0
    if lam_coeff == 0:
        raise ValueError("degenerate test-curve system")
    mu = -lam_coeff  # matching -1 * mu = lam_coeff against 3w - lambda
    b2 = 3 * mu
    return M4Class(a, b0, b1, b2)


# canonical slope on moduli of stable curves: K = 13 lambda - 2 delta
_K_SLOPE = (Fraction(13), Fraction(-2))


def hassett_keel_alpha(cls):
    """The log-canonical slope alpha with cls proportional to K + alpha*delta.

    Requires b0 = b1 = b2 (the class must be a multiple of
    a*lambda - b*delta); returns None when no positive multiple works.
    """
    if isinstance(cls, (tuple, list)):
        cls = M4Class.of(*cls)
    if not (cls.b0 == cls.b1 == cls.b2):
        raise ValueError("class must have equal boundary coefficients")
    a, b = cls.a, cls.b0
    if a == 0:
        return None
    t = a / _K_SLOPE[0]
    if t <= 0:
        return None
    # -b = t*(alpha + K_delta) with K = 13 lambda - 2 delta
    return -b / t - _K_SLOPE[1]
