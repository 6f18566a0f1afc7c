"""The curve-to-cubic dictionary and the non-reduced limit detector."""

import random
from fractions import Fraction

import pytest

from canon4.correspond import (
    SIGNED_RNC,
    STANDARD_RNC,
    CorrespondenceError,
    CubicThreefold,
    chordal_detect,
    classify_cubic_point,
    correspondence_check,
    cubic_to_curve,
    curve_to_cubic,
    marked_point_type,
)
from canon4.corpus import CURVE_ENTRIES, get_entry
from canon4.scheme import TwoThreeScheme


def test_cubic_threefold_validates_marked_point():
    with pytest.raises(CorrespondenceError):
        CubicThreefold.parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", (1, 0, 0, 0, 0))
    X = CubicThreefold.parse("x0*x3^2 - x0*x2*x4 + x2^3", (1, 0, 0, 0, 0))
    assert X.multiplicity_at((1, 0, 0, 0, 0)) == 2


def test_curve_to_cubic_marks_a_double_point():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    X = curve_to_cubic(sch)
    assert X.marked == (1, 0, 0, 0, 0)
    assert X.multiplicity_at(X.marked) == 2
    assert X.F.is_homogeneous(3)


def test_round_trip_on_all_curve_entries():
    for entry in CURVE_ENTRIES:
        sch = entry.scheme()
        assert cubic_to_curve(curve_to_cubic(sch)) == sch, entry.name


def test_round_trip_after_random_unimodular_moves():
    rng = random.Random(60133)
    sch = get_entry("C_{2A5}").scheme()
    X = curve_to_cubic(sch)
    for _ in range(3):
        # random integer shear in P^4 fixing nothing in particular
        M = [[Fraction(1 if i == j else 0) for j in range(5)] for i in range(5)]
        i, j = rng.sample(range(5), 2)
        M[i][j] = Fraction(rng.choice([-2, -1, 1, 2]))
        Y = X.transformed(M)
        got = cubic_to_curve(Y)
        assert Y.multiplicity_at(Y.marked) == 2
        assert got.quadric_rank() == sch.quadric_rank()
        # moving back must recover the original curve
        back = Y.transformed([[M[a][b] * -1 if a != b else 1 for b in range(5)] for a in range(5)])
        assert cubic_to_curve(back) == sch


def test_marked_point_type_by_quadric_rank():
    r4 = get_entry("C_{2A5}").scheme()
    assert marked_point_type(r4).label == "A1"
    r3_missing = get_entry("A4-cone").scheme()
    assert marked_point_type(r3_missing).label == "A2"
    r3_through = get_entry("C_{1,1}").scheme()
    # the curve has A3 at the vertex, so the threefold point is A5
    assert marked_point_type(r3_through).label == "A5"
    r2 = get_entry("C_D").scheme()
    assert marked_point_type(r2).label == "D4"


def test_marked_point_type_refuses_collapsed_line():
    bad = TwoThreeScheme.parse("x1*x2", "x3^3 + x3^2*x4")
    with pytest.raises(CorrespondenceError):
        marked_point_type(bad)


def test_classify_cubic_point_sees_curve_singularities():
    sch = get_entry("C_{1,1}").scheme()
    X = curve_to_cubic(sch)
    rec = classify_cubic_point(X, (0, 0, 0, 0, 1))
    assert rec.host == "threefold"
    assert rec.sing_type.label == "A5"


def test_correspondence_check_matches_on_marked_pairs():
    entry = get_entry("C_{1,1}")
    rep = correspondence_check(entry.scheme(), points=[(1, 0, 0, 0), (0, 0, 0, 1)])
    assert rep.matched is True
    assert rep.marked_engine.label == rep.marked_table.label == "A5"
    assert [x.sing_type.label for _, x in rep.pairs] == ["A5"]
    wire = rep.to_wire()
    import json

    json.dumps(wire)


def test_chordal_detect_finds_ribbon():
    sch = get_entry("C_{1,2}").scheme()
    res = chordal_detect(sch)
    assert res.status == "ribbon"
    assert res.witness == SIGNED_RNC


def test_chordal_detect_on_reduced_curve():
    sch = get_entry("C_D").scheme()
    res = chordal_detect(sch)
    assert res.status == "reduced"
    assert res.smooth_point is not None


def test_chordal_detect_admits_ignorance():
    # no ribbon witness fits, and the curve has no small rational smooth
    # point to certify a reduced branch either
    sch = get_entry("C_{1,1}").scheme()
    assert chordal_detect(sch).status == "unknown"


def test_rnc_constants_differ_by_one_sign():
    assert STANDARD_RNC != SIGNED_RNC
    diffs = [a != b for a, b in zip(STANDARD_RNC, SIGNED_RNC)]
    assert sum(diffs) == 1
