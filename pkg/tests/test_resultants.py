"""Sylvester resultants of binary forms and the cubic discriminant."""

import random
from fractions import Fraction

import pytest

from canon4.domains import QQ
from canon4.multipoly import MultiPoly
from canon4.resultants import (
    binary_cubic_discriminant,
    binary_form_coeffs,
    resultant_binary,
    sylvester_matrix,
)

ST = ("s", "t")


def B(text):
    return MultiPoly.parse(text, ST)


def test_binary_form_coeffs_orders_by_s_power():
    f = B("s^2 - 3*s*t + 2*t^2")
    deg, coeffs = binary_form_coeffs(f, "s", "t")
    assert deg == 2
    assert [str(c) for c in coeffs] == ["1", "-3", "2"]


def test_resultant_vanishes_iff_common_root():
    # (s - t)(s - 2t) and (s - 2t)(s + t) share the root s = 2t
    f = B("(s - t)*(s - 2*t)")
    g = B("(s - 2*t)*(s + t)")
    r = resultant_binary(f, g, "s", "t")
    assert r.is_zero()
    h = B("(s - 3*t)*(s + t)")
    assert not resultant_binary(f, h, "s", "t").is_zero()


def test_resultant_multiplicative_in_first_argument():
    rng = random.Random(2501)
    for _ in range(8):
        def rand_linear():
            a, b = rng.randrange(-3, 4), rng.randrange(1, 4)
            return B(f"{a}*s + {b}*t") if a else B(f"{b}*t")

        f1, f2, g = rand_linear(), rand_linear(), B("s^2 + s*t - t^2")
        lhs = resultant_binary(f1 * f2, g, "s", "t")
        rhs = resultant_binary(f1, g, "s", "t") * resultant_binary(f2, g, "s", "t")
        assert lhs == rhs


def test_resultant_keeps_spectator_variables():
    vars3 = ("s", "t", "u")
    f = MultiPoly.parse("s - u*t", vars3)
    g = MultiPoly.parse("s^2 - 2*t^2", vars3)
    r = resultant_binary(f, g, "s", "t")
    # eliminating (s, t) from s = u t and s^2 = 2 t^2 forces u^2 = 2;
    # the result lives in the spectator variables only
    assert r == MultiPoly.parse("u^2 - 2", r.vars)


def test_sylvester_matrix_shape():
    m = sylvester_matrix([1, 0, -2], [3, 1])
    assert len(m) == 3 and all(len(r) == 3 for r in m)


def test_cubic_discriminant_detects_double_roots():
    # (s - t)^2 (s + t) = s^3 - s^2 t - s t^2 + t^3
    assert binary_cubic_discriminant([1, -1, -1, 1]) == 0
    # s^3 - s t^2 has three distinct roots 0, 1, -1
    assert binary_cubic_discriminant([1, 0, -1, 0]) != 0
    # s^3 + t^3 likewise
    assert binary_cubic_discriminant([1, 0, 0, 1]) != 0
