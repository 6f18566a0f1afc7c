"""Finite-field point scans used to certify singular-point inventories."""

from fractions import Fraction

import numpy as np
import pytest

from canon4.domains import QuadExtField
from canon4.multipoly import MultiPoly
from canon4.scanning import (
    PrimeUnusable,
    cubic_offpoint_singular_data,
    curve_singular_points,
    eval_mod,
    projective_points,
    reduce_point_mod_p,
)
from canon4.scheme import TwoThreeScheme


def test_projective_point_count():
    for p in (3, 5, 7):
        pts = projective_points(p, 4)
        assert len(pts) == p**3 + p**2 + p + 1
        # normalization: first nonzero coordinate equals 1
        for row in pts[:: max(1, len(pts) // 50)]:
            lead = next(x for x in row if x)
            assert lead == 1
        as_tuples = {tuple(r) for r in pts.tolist()}
        assert len(as_tuples) == len(pts)


def test_eval_mod_matches_exact_reduction():
    f = MultiPoly.parse("1/2*x1^2 + x2*x3 - 3*x4^2", ("x1", "x2", "x3", "x4"))
    p = 11
    pts = projective_points(p, 4)[:200]
    got = eval_mod(f, pts, p)
    inv2 = pow(2, -1, p)
    for row, v in zip(pts.tolist(), got.tolist()):
        x1, x2, x3, x4 = row
        assert v == (inv2 * x1 * x1 + x2 * x3 - 3 * x4 * x4) % p


def test_eval_mod_unusable_prime():
    f = MultiPoly.parse("1/5*x1", ("x1", "x2", "x3", "x4"))
    with pytest.raises(PrimeUnusable):
        eval_mod(f, projective_points(5, 4), 5)


def test_known_singular_points_found_by_scan():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    for p in (101, 103):
        pts = curve_singular_points(sch, p)
        assert (1, 0, 0, 0) in pts
        assert (0, 0, 0, 1) in pts
        assert len(pts) == 2


def test_scan_empty_for_smooth_curve():
    from canon4.corpus import get_entry

    smooth = get_entry("smooth-fermat").scheme()
    assert curve_singular_points(smooth, 101) == set()


def test_reduce_rational_point():
    assert reduce_point_mod_p((Fraction(1, 2), Fraction(0), Fraction(1), Fraction(0)), 7) == [
        (1, 0, 2, 0)
    ]
    with pytest.raises(PrimeUnusable):
        reduce_point_mod_p((Fraction(1, 7), Fraction(1), Fraction(0), Fraction(0)), 7)


def test_reduce_quadratic_point_splits_by_prime():
    K = QuadExtField(-1, 1)
    th = K.gen
    pt = (K.coerce(0), K.coerce(0), K.coerce(1), th)
    # x^2 - x + 1 factors mod p iff p = 1 mod 3
    assert len(reduce_point_mod_p(pt, 103)) == 2
    assert len(reduce_point_mod_p(pt, 101)) == 0
    found = reduce_point_mod_p(pt, 7)
    assert found == [(0, 0, 1, 3), (0, 0, 1, 5)]


def test_offpoint_data_counts_cone_singularities():
    # marked cubic x0 q + f: its singular points away from the marked one
    # sit over the base points where the (q, f) Jacobian drops rank
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    data = cubic_offpoint_singular_data(sch, 101)
    assert data["nonisolated"] is False
    assert data["count"] == 1  # the deeper of the two curve singularities
    assert data["curve_only"] == 1  # the one at the cone vertex


def test_offpoint_data_flags_positive_dimensional_locus():
    # both gradients die along x1 = x2 = 0, x3^2 + x4^2 = 0, which has
    # points mod 13 because -1 is a square there
    shared = TwoThreeScheme.parse("x1*x2", "x1*x3^2 + x1*x4^2 + x1^3")
    data = cubic_offpoint_singular_data(shared, 13)
    assert data["nonisolated"] is True
    assert cubic_offpoint_singular_data(shared, 11)["nonisolated"] is False
