"""Classification of curve singularities on the quadric-cubic models."""

from fractions import Fraction

import pytest

from canon4.domains import QQ, QuadExtField
from canon4.multipoly import MultiPoly
from canon4.scheme import TwoThreeScheme
from canon4.singclass import (
    PointNotOnScheme,
    PointNotSingular,
    SimultaneousSingularPoint,
    SingType,
    classify_affine_singularity,
    classify_point,
    classify_scheme,
    parse_sing_type,
    plane_component_test,
)


def germ(text, vars):
    return MultiPoly.parse(text, vars)


@pytest.mark.parametrize(
    "text,label",
    [
        ("x^2 + y^2", "A1"),
        ("x^2 - y^2", "A1"),
        ("x^2 + y^3", "A2"),
        ("x^2 + y^4", "A3"),
        ("x^2 - y^7", "A6"),
        ("x^2*y - y^3", "D4"),
        ("x^2*y + y^4", "Corank2Other"),
        ("x^2 + y^2 + x*y^5", "A1"),
    ],
)
def test_plane_germ_types(text, label):
    t, _ = classify_affine_singularity(germ(text, ("x", "y")))
    assert t.label == label


def test_stabilization_ignores_extra_squares():
    t2, _ = classify_affine_singularity(germ("x^2 + y^5", ("x", "y")))
    t3, _ = classify_affine_singularity(germ("x^2 + y^5 + z^2", ("x", "y", "z")))
    assert t2.label == t3.label == "A4"


def test_flat_residual_stays_inconclusive():
    # x^2 alone leaves a residual that is zero to every computed order,
    # so a finite jet cannot tell it from x^2 + y^(order+1); the engine
    # refuses to guess
    t, _ = classify_affine_singularity(germ("x^2", ("x", "y")), order=10)
    assert t.label == "InconclusiveAtJet(10)"


def test_germ_input_validation():
    with pytest.raises(ValueError):
        classify_affine_singularity(germ("x + y^2", ("x", "y")))
    with pytest.raises(ValueError):
        classify_affine_singularity(germ("1 + x^2", ("x", "y")))


def test_sing_type_parsing_round_trip():
    for label in ("A1", "A12", "D4", "Corank2Other", "NonIsolated"):
        assert parse_sing_type(label).label == label
    with pytest.raises(ValueError):
        parse_sing_type("E8")


def test_classify_point_on_cone_vertex():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    rec = classify_point(sch, (1, 0, 0, 0))
    assert rec.sing_type.label == "A3"
    assert rec.location == "quadric_vertex"
    # the cone is singular at its vertex, so the germ is read on the cubic
    assert rec.host == "cubic"
    rec2 = classify_point(sch, (0, 0, 0, 1))
    assert rec2.sing_type.label == "A5"
    assert rec2.location == "quadric_smooth_point"
    assert rec2.host == "quadric"


def test_classify_point_rejects_bad_points():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    with pytest.raises(PointNotOnScheme):
        classify_point(sch, (0, 1, 1, 1))
    pair = TwoThreeScheme.parse("x1*x2", "x3^3 + x4^3")
    with pytest.raises(PointNotSingular):
        classify_point(pair, (1, 0, 1, -1))


def test_simultaneous_singularity_raises():
    sch = TwoThreeScheme.parse("x1*x2 + x3^2", "x1^3 + x2^3 + x3^3")
    with pytest.raises(SimultaneousSingularPoint):
        classify_point(sch, (0, 0, 0, 1))


def test_classification_invariant_under_coordinate_change():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    # a unimodular change mixing all coordinates
    M = [
        [1, 1, 0, 0],
        [0, 1, 0, 0],
        [0, 2, 1, 0],
        [0, 0, -1, 1],
    ]
    moved = sch.transformed(M)
    from canon4.linalg import invert

    Minv = invert([[Fraction(v) for v in row] for row in M])
    old_pts = [(1, 0, 0, 0), (0, 0, 0, 1)]
    new_pts = []
    for pt in old_pts:
        img = [sum(Minv[i][j] * pt[j] for j in range(4)) for i in range(4)]
        new_pts.append(tuple(img))
    labels = sorted(
        classify_point(moved, pt).sing_type.label for pt in new_pts
    )
    assert labels == ["A3", "A5"]


def test_scheme_analysis_complete_flag():
    sch = TwoThreeScheme.parse("x3^2 - x2*x4", "x2^3 + x1*x2*x3 + x1^2*x4")
    full = classify_scheme(sch, [(1, 0, 0, 0), (0, 0, 0, 1)])
    assert full.complete is True
    assert full.type_labels == ["A3", "A5"]
    partial = classify_scheme(sch, [(1, 0, 0, 0)])
    assert partial.complete is False
    unscanned = classify_scheme(sch, [(1, 0, 0, 0)], scan=False)
    assert unscanned.complete is None


def test_analysis_wire_is_json_friendly():
    import json

    sch = TwoThreeScheme.parse("x1*x2", "x3^3 + x4^3")
    K = QuadExtField(-1, 1)
    th = K.gen
    pts = [
        (0, 0, 1, -1),
        (K.coerce(0), K.coerce(0), K.coerce(1), th),
        (K.coerce(0), K.coerce(0), K.coerce(1), 1 - th),
        (1, 0, 0, 0),
        (0, 1, 0, 0),
    ]
    analysis = classify_scheme(sch, pts)
    json.dumps(analysis.to_wire())
    assert analysis.complete is True
    assert analysis.type_labels == ["A1", "A1", "A1", "D4", "D4"]


def test_plane_component_test_flags_reducible_case():
    # deep A_k points can hide a plane component; the two-plane quadric
    # with a conic plus line arrangement is the classic reducible witness
    sch = TwoThreeScheme.parse(
        "x3^2 - x2*x4", "4*x1^2*x4 + 4*x1*x2*x3 + 4*x1*x2^2 + x2^3"
    )
    analysis = classify_scheme(sch, [(1, 0, 0, 0), (0, 0, 0, 1)], order=12, scan=False)
    deep = next(r for r in analysis.records if r.sing_type.kind == "A" and r.sing_type.k >= 6)
    result = plane_component_test(sch, deep)
    assert result.verdict in (True, False)
