"""Implicit function solving with truncated jets."""

import pytest

from canon4.domains import QQ
from canon4.multipoly import MultiPoly
from canon4.series import (
    SeriesError,
    poly_implicit_solve,
    poly_substitute_truncated,
)


def test_implicit_solve_parabola():
    # y = x^2 + y^2 gives the generating series of the Catalan-like
    # branch y(x) = x^2 + x^4 + 2 x^6 + O(x^8)
    F = MultiPoly.parse("y - x^2 - y^2", ("x", "y"))
    phi = poly_implicit_solve(F, "y", order=7)
    expect = MultiPoly.parse("x^2 + x^4 + 2*x^6", ("x",))
    assert phi == expect


def test_implicit_solution_satisfies_equation():
    F = MultiPoly.parse("z + z^3 - x*y + x^3 + y^2*z", ("x", "y", "z"))
    order = 9
    phi = poly_implicit_solve(F, "z", order=order)
    rest = ("x", "y")
    images = {
        "x": MultiPoly.variable("x", rest),
        "y": MultiPoly.variable("y", rest),
        "z": phi,
    }
    assert poly_substitute_truncated(F, images, order).is_zero()


def test_implicit_solve_requires_linear_term():
    F = MultiPoly.parse("z^2 - x", ("x", "z"))
    with pytest.raises(SeriesError):
        poly_implicit_solve(F, "z", order=5)


def test_implicit_solve_requires_vanishing_at_origin():
    F = MultiPoly.parse("z + 1", ("x", "z"))
    with pytest.raises(SeriesError):
        poly_implicit_solve(F, "z", order=5)


def test_truncated_substitution_matches_full_then_cut():
    F = MultiPoly.parse("x^2*y + y^3 - 2*x", ("x", "y"))
    tvars = ("u", "v")
    images = {
        "x": MultiPoly.parse("u + v^2", tvars),
        "y": MultiPoly.parse("v - u^2", tvars),
    }
    order = 4
    fast = poly_substitute_truncated(F, images, order)
    slow = F.substitute(images).truncate(order)
    assert fast == slow
