"""Canonical forms and invariants of quadric-cubic intersections."""

from fractions import Fraction

import pytest

from canon4.multipoly import MultiPoly
from canon4.scheme import CURVE_VARS, SchemeError, TwoThreeScheme


def test_quadric_is_made_monic():
    sch = TwoThreeScheme.parse("2*x3^2 - 2*x2*x4", "x2^3")
    # leading monomial under graded lex is x2*x4, so that sign wins
    assert sch.q == MultiPoly.parse("x2*x4 - x3^2", CURVE_VARS)
    assert sch.q.leading_coefficient() == 1
    rescaled = TwoThreeScheme.parse("-7*x3^2 + 7*x2*x4", "x2^3")
    assert rescaled.q == sch.q


def test_cubic_reduced_modulo_quadric_multiples():
    base = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    shifted = TwoThreeScheme.parse(
        "x3^2 - x2*x4",
        "x2^3 + x1*x2*x3 + x1^2*x4 + x1*(x3^2 - x2*x4)",
    )
    assert base == shifted
    assert hash(base) == hash(shifted)


def test_rejects_wrong_degrees():
    with pytest.raises(SchemeError):
        TwoThreeScheme.parse("x1^3", "x2^3")
    with pytest.raises(SchemeError):
        TwoThreeScheme.parse("x1^2", "x2^2")
    with pytest.raises(SchemeError):
        TwoThreeScheme.parse("x1^2 + x1", "x2^3")


def test_quadric_rank_and_kernel():
    cone = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1^2*x4")
    assert cone.quadric_rank() == 3
    assert cone.quadric_kernel() == [[1, 0, 0, 0]]
    smooth = TwoThreeScheme.parse("x1*x4 - x2*x3", "x1*x3^2 + x2^2*x4")
    assert smooth.quadric_rank() == 4
    assert smooth.quadric_kernel() == []
    pair = TwoThreeScheme.parse("x1*x2", "x3^3 + x4^3")
    assert pair.quadric_rank() == 2
    assert len(pair.quadric_kernel()) == 2


def test_gram_matrix_reproduces_quadric():
    sch = TwoThreeScheme.parse("x1*x4 - x2*x3 + x2^2", "x1^3")
    G = sch.gram
    x = [Fraction(2), Fraction(-1), Fraction(3), Fraction(5)]
    qx = sum(x[i] * G[i][j] * x[j] for i in range(4) for j in range(4))
    assert qx == sch.q.evaluate(x)


def test_complete_intersection_detects_shared_plane():
    shared = TwoThreeScheme.parse("x1*x2", "x1*x3^2 + x1*x4^2 + x1^3")
    assert not shared.is_complete_intersection()
    honest = TwoThreeScheme.parse("x1*x2", "x3^3 + x4^3")
    assert honest.is_complete_intersection()


def test_transform_by_unimodular_matrix():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    # swap x1 and x4
    M = [
        [0, 0, 0, 1],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [1, 0, 0, 0],
    ]
    moved = sch.transformed(M)
    assert moved.quadric_rank() == sch.quadric_rank()
    back = moved.transformed(M)
    assert back == sch


def test_wire_round_trip():
    sch = TwoThreeScheme.parse("x1*x4 - x2*x3", "x1*x3^2 + x2^2*x4")
    assert TwoThreeScheme.from_wire(sch.to_wire()) == sch


def test_parseable_string_forms():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    again = TwoThreeScheme.parse(str(sch.q), str(sch.f))
    assert again == sch
