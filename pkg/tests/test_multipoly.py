"""Exact multivariate polynomials: parsing, ring ops, substitution."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from canon4.domains import QQ, PrimeField
from canon4.multipoly import ExactDivisionError, MultiPoly

XYZ = ("x", "y", "z")


def P(text, vars=XYZ, dom=QQ):
    return MultiPoly.parse(text, vars, dom)


def test_parse_round_trip_is_canonical():
    f = P("y*x + x^2 - 3 + 2*x^2")
    assert str(f) == "3*x^2 + x*y - 3"
    assert P(str(f)) == f


@pytest.mark.parametrize(
    "text",
    [
        "x^3 - x*y*z + 1/2*y^2 - 7",
        "-(x - y)^2 + z",
        "(x + y)*(x - y)",
        "2/3",
        "x^12",
        "-x",
    ],
)
def test_str_then_parse_identity(text):
    f = P(text)
    assert P(str(f)) == f


def test_parse_rejects_unknown_variable():
    with pytest.raises(ValueError):
        P("x + w")


def test_zero_and_constant():
    z = MultiPoly.zero(XYZ)
    assert z.is_zero() and not z
    c = MultiPoly.constant(Fraction(5, 2), XYZ)
    assert str(c) == "5/2"
    assert c.total_degree() == 0


def random_poly(rng, nterms=4, deg=3):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randrange(deg) for _ in XYZ)
        terms[e] = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
    return MultiPoly(QQ, XYZ, terms)


def test_ring_axioms_random():
    rng = random.Random(20240915)
    for _ in range(25):
        f, g, h = (random_poly(rng) for _ in range(3))
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - f == MultiPoly.zero(XYZ)


def test_pow_matches_repeated_product():
    f = P("x + 2*y - z")
    assert f ** 0 == MultiPoly.constant(1, XYZ)
    assert f ** 3 == f * f * f
    with pytest.raises(ValueError):
        f ** -1


def test_evaluate_agrees_with_substitute():
    f = P("x^2*y - 3*y*z + 1/2")
    vals = (Fraction(2), Fraction(-1), Fraction(1, 3))
    ev = f.evaluate(vals)
    images = {n: MultiPoly.constant(v, XYZ) for n, v in zip(XYZ, vals)}
    assert f.substitute(images) == MultiPoly.constant(ev, XYZ)
    assert ev == Fraction(2) ** 2 * -1 - 3 * -1 * Fraction(1, 3) + Fraction(1, 2)


def test_substitution_composes():
    f = P("x^2 + y*z")
    g = {"x": P("y + z"), "y": P("x"), "z": P("z - x")}
    h = {"x": P("2*x"), "y": P("y + 1"), "z": P("z")}
    once = f.substitute(g).substitute(h)
    composed = f.substitute({k: v.substitute(h) for k, v in g.items()})
    assert once == composed


def test_substitute_linear_permutation_is_relabeling():
    f = P("x^3 - 2*x*y + z^2")
    # row i rewrites old variable i in the new ones: x<->y swap
    M = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert f.substitute_linear(M) == P("y^3 - 2*y*x + z^2")


def test_substitute_linear_shear():
    f = P("x^2", vars=("x", "y"))
    g = f.substitute_linear([[1, 1], [0, 1]])
    assert g == P("x^2 + 2*x*y + y^2", vars=("x", "y"))


def test_substitute_linear_identity():
    f = P("x*y*z - 4*z^3")
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert f.substitute_linear(eye) == f


def test_euler_identity_for_homogeneous():
    f = P("x^3 + 2*x*y*z - z^3 + y^2*z")
    assert f.is_homogeneous(3)
    euler = MultiPoly.zero(XYZ)
    for name in XYZ:
        euler = euler + MultiPoly.variable(name, XYZ) * f.partial(name)
    assert euler == 3 * f


def test_gradient_order_matches_vars():
    f = P("x^2*y + z")
    gx, gy, gz = f.gradient()
    assert gx == P("2*x*y")
    assert gy == P("x^2")
    assert gz == P("1")


def test_homogeneous_components_sum_back():
    f = P("x^3 - x*y + 4*z - 1/3")
    total = MultiPoly.zero(XYZ)
    for d in range(f.total_degree() + 1):
        total = total + f.homogeneous_component(d)
    assert total == f
    assert f.truncate(1) == P("4*z - 1/3")


def test_exact_div_round_trip():
    f = P("x^2 - y^2 + x*z")
    g = P("x + 3*y - z")
    assert (f * g).exact_div(g) == f
    with pytest.raises(ExactDivisionError):
        P("x^2 + 1").exact_div(P("y"))


def test_content_and_primitive():
    f = P("4/3*x^2 - 2*y")
    assert f.content() * Fraction(1) == f.content()
    assert f == f.primitive() * f.content()
    assert f.primitive().content() == 1


def test_monic_scales_leading_coefficient():
    f = P("3*x^2 + 6*y")
    m = f.monic()
    assert m.leading_coefficient() == 1
    assert 3 * m == f


def test_wire_round_trip():
    f = P("x^2 - 1/2*y*z + 7")
    assert MultiPoly.from_wire(f.to_wire()) == f
    assert MultiPoly.from_json(f.to_json()) == f


def test_change_domain_reduces_coefficients():
    F = PrimeField(7)
    f = P("1/2*x + 10*y")
    g = f.change_domain(F)
    # 1/2 = 4 and 10 = 3 in F_7
    assert g == MultiPoly.parse("4*x + 3*y", XYZ, F)


def test_with_vars_embeds():
    f = P("x + y", vars=("x", "y"))
    g = f.with_vars(("x", "y", "t"))
    assert g.vars == ("x", "y", "t")
    assert g.evaluate((1, 2, 99)) == 3


def test_drop_vars_requires_absence():
    f = P("x + y")
    g = f.drop_vars(("z",))
    assert g.vars == ("x", "y")
    with pytest.raises(ValueError):
        f.drop_vars(("x",))


coef = st.integers(min_value=-6, max_value=6)
expo = st.tuples(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
)
poly_terms = st.dictionaries(expo, coef, min_size=0, max_size=5)


def from_terms(d):
    return MultiPoly(QQ, ("x", "y"), {e: Fraction(c) for e, c in d.items() if c})


@settings(max_examples=60)
@given(a=poly_terms, b=poly_terms)
def test_string_form_respects_product(a, b):
    f, g = from_terms(a), from_terms(b)
    vars2 = ("x", "y")
    assert MultiPoly.parse(str(f * g), vars2) == f * g
    assert MultiPoly.parse(str(f + g), vars2) == f + g


@settings(max_examples=40)
@given(a=poly_terms, b=poly_terms)
def test_evaluation_is_a_ring_map(a, b):
    f, g = from_terms(a), from_terms(b)
    at = (Fraction(3, 2), Fraction(-2))
    assert (f * g).evaluate(at) == f.evaluate(at) * g.evaluate(at)
    assert (f + g).evaluate(at) == f.evaluate(at) + g.evaluate(at)
