"""Arithmetic sanity for the prime fields and the quadratic extension."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from canon4.domains import QQ, PrimeField, QuadExtField


def test_qq_coerce():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.coerce(Fraction(-7, 3)) == Fraction(-7, 3)


def test_prime_field_basics():
    F = PrimeField(101)
    a = F.coerce(45)
    b = F.coerce(77)
    assert a + b == F.coerce(45 + 77)
    assert a * b == F.coerce(45 * 77)
    assert a - a == F.coerce(0)
    assert not F.coerce(0)
    assert F.coerce(-1) == F.coerce(100)


def test_prime_field_inverses():
    F = PrimeField(103)
    for v in range(1, 103):
        x = F.coerce(v)
        assert x * (F.coerce(1) / x) == F.coerce(1)


def test_prime_field_fraction_coercion():
    # 1/2 mod 7 is 4 because 2*4 = 8 = 1
    F = PrimeField(7)
    assert F.coerce(Fraction(1, 2)) == F.coerce(4)
    with pytest.raises(ZeroDivisionError):
        F.coerce(Fraction(1, 7))


def test_prime_fields_compare_by_modulus():
    assert PrimeField(101) == PrimeField(101)
    assert PrimeField(101) != PrimeField(103)
    assert hash(PrimeField(101)) == hash(PrimeField(101))


@pytest.fixture(scope="module")
def eis():
    # theta^2 - theta + 1 = 0, a primitive sixth root of unity
    return QuadExtField(-1, 1)


def test_sixth_root_relations(eis):
    th = eis.gen
    assert th * th == th - 1
    assert th ** 3 == eis.coerce(-1)
    assert th ** 6 == eis.one
    assert th * th.conjugate() == eis.one


def test_quadext_norm_and_division(eis):
    th = eis.gen
    x = 2 + 3 * th
    # N(a + b*theta) = a^2 + ab + b^2 for this minimal polynomial
    assert x.norm() == Fraction(19)
    assert x * x.conjugate() == eis.coerce(x.norm())
    assert x / x == eis.one
    y = (1 - th) / (1 + th)
    assert y * (1 + th) == 1 - th


small_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


@given(a0=small_fracs, a1=small_fracs, b0=small_fracs, b1=small_fracs)
def test_quadext_norm_multiplicative(a0, a1, b0, b1):
    K = QuadExtField(-1, 1)
    x = K.coerce(a0) + a1 * K.gen
    y = K.coerce(b0) + b1 * K.gen
    assert (x * y).norm() == x.norm() * y.norm()


@given(a0=small_fracs, a1=small_fracs)
def test_quadext_inverse(a0, a1):
    K = QuadExtField(-1, 1)
    x = K.coerce(a0) + a1 * K.gen
    if x:
        assert x * (K.one / x) == K.one
