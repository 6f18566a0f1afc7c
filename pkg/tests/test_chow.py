"""Chow forms of space sextics and the cycle-side weight calculus."""

import random
from fractions import Fraction

import pytest

from canon4.chow import (
    PLUCKER_PAIRS,
    PLUCKER_VARS,
    ChowForm,
    chow_destabilize,
    chow_form,
    chow_weight_min,
    plucker_relation,
    reduce_mod_plucker,
)
from canon4.corpus import get_entry
from canon4.multipoly import MultiPoly
from canon4.resultants import resultant_binary
from canon4.scheme import TwoThreeScheme


def line_meets_curve(scheme, a, b):
    """Reference incidence: restrict (q, f) to the line through a and b
    and ask the resultant whether the binary forms share a root."""
    st = ("s", "t")
    images = {}
    for i, name in enumerate(("x1", "x2", "x3", "x4")):
        text = []
        if a[i]:
            text.append(f"{a[i]}*s")
        if b[i]:
            text.append(f"{b[i]}*t")
        images[name] = MultiPoly.parse(" + ".join(text) if text else "0", st)
    qr = scheme.q.substitute(images)
    fr = scheme.f.substitute(images)
    if qr.is_zero() or fr.is_zero():
        return True
    return resultant_binary(qr, fr, "s", "t").is_zero()


@pytest.fixture(scope="module")
def c2a5_chow():
    return chow_form(get_entry("C_{2A5}").scheme())


def test_chow_form_has_degree_six(c2a5_chow):
    assert c2a5_chow.degree == 6


def test_incidence_against_resultant_oracle(c2a5_chow):
    sch = get_entry("C_{2A5}").scheme()
    rng = random.Random(420)
    agree = 0
    for _ in range(60):
        a = [rng.randrange(-4, 5) for _ in range(4)]
        b = [rng.randrange(-4, 5) for _ in range(4)]
        # skip degenerate spans
        pl = [a[i] * b[j] - a[j] * b[i] for i, j in PLUCKER_PAIRS]
        if all(v == 0 for v in pl):
            continue
        assert c2a5_chow.meets_line(a, b) == line_meets_curve(sch, a, b)
        agree += 1
    assert agree >= 50


def test_lines_through_singular_points_meet(c2a5_chow):
    # every line through a point of the curve meets it
    pt = (1, 0, 0, 0)
    rng = random.Random(8)
    for _ in range(10):
        b = [rng.randrange(-3, 4) for _ in range(4)]
        pl = [pt[i] * b[j] - pt[j] * b[i] for i, j in PLUCKER_PAIRS]
        if all(v == 0 for v in pl):
            continue
        assert c2a5_chow.meets_line(pt, b)


def test_wire_round_trip(c2a5_chow):
    back = ChowForm.from_wire(c2a5_chow.to_wire())
    assert back.poly == c2a5_chow.poly


def test_reduce_mod_plucker_idempotent(c2a5_chow):
    rel = plucker_relation()
    shifted = c2a5_chow.poly + rel * MultiPoly.parse(
        "p01*p23 - 3*p02^2", PLUCKER_VARS
    )
    assert reduce_mod_plucker(shifted) == reduce_mod_plucker(c2a5_chow.poly)


def test_chow_weight_min_representative_independent(c2a5_chow):
    rel = plucker_relation()
    w = (2, 1, -1, -2)
    base = chow_weight_min(c2a5_chow.poly, w)
    for shift in ("p01*p23", "p03*p12 - p02*p13", "2*p01^2 - p23^2"):
        moved = c2a5_chow.poly + rel * MultiPoly.parse(shift, PLUCKER_VARS)
        assert chow_weight_min(moved, w) == base


def test_chow_weight_min_validates_input(c2a5_chow):
    with pytest.raises(ValueError):
        chow_weight_min(c2a5_chow, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        chow_weight_min(c2a5_chow, (1, -1, 0))


def test_chow_destabilize_on_unstable_cycles():
    for name in ("simultaneous-pair", "split-contact"):
        R = chow_form(get_entry(name).scheme())
        cert = chow_destabilize(R)
        assert cert is not None, name
        assert cert.min_weight >= 1
        assert sum(cert.w) == 0
        assert chow_weight_min(R, cert.w) == cert.min_weight


def test_chow_destabilize_none_for_semistable():
    for name in ("C_{2A5}", "smooth-fermat"):
        R = chow_form(get_entry(name).scheme())
        assert chow_destabilize(R) is None, name


def test_plucker_relation_is_the_grassmann_quadric():
    rel = plucker_relation()
    rng = random.Random(31337)
    for _ in range(12):
        a = [Fraction(rng.randrange(-4, 5)) for _ in range(4)]
        b = [Fraction(rng.randrange(-4, 5)) for _ in range(4)]
        coords = [a[i] * b[j] - a[j] * b[i] for i, j in PLUCKER_PAIRS]
        assert rel.evaluate(coords) == 0
