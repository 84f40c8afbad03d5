from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from modpuiseux.dynamic import DynamicContext, Split, ZeroDivisorSplit, dyn_invert
from modpuiseux.errors import ZeroInversion
from modpuiseux.fields import QQ
from modpuiseux.parsing import parse_unipoly


def U(text):
    return parse_unipoly(text, QQ)


def test_split_on_zero_divisor():
    K = DynamicContext(QQ, U("z^2 - 1"))
    r = dyn_invert(K.gen - 1, K)
    assert isinstance(r, Split)
    assert {r.h1.to_str("z"), r.h2.to_str("z")} == {"z - 1", "z + 1"}
    assert r.h1 * r.h2 == K.modulus


def test_inverse_in_field():
    K = DynamicContext(QQ, U("z^2 + 1"))
    inv = dyn_invert(K.gen, K)
    assert inv == -K.gen
    assert K.gen * inv == K.one


def test_degree_one_modulus():
    K = DynamicContext(QQ, U("z"))
    assert dyn_invert(K(3), K) == K(Fraction(1, 3))


def test_zero_inversion():
    K = DynamicContext(QQ, U("z^2 - 2"))
    with pytest.raises(ZeroInversion):
        dyn_invert(K.zero, K)


def test_bool_raises_split_for_zero_divisors():
    K = DynamicContext(QQ, U("z^3 - z"))
    with pytest.raises(ZeroDivisorSplit) as info:
        bool(K.gen ** 2 - 1)
    s = info.value
    assert s.ctx is K and s.h1 * s.h2 == K.modulus


def test_split_from_inner_level_names_its_owner():
    K1 = DynamicContext(QQ, U("z^2 - 1"))
    K2 = DynamicContext(K1, parse_unipoly("z^2 - 2", QQ).map(K1, K1))
    with pytest.raises(ZeroDivisorSplit) as info:
        (K2.lift(K1.gen - 1)).inverse()
    assert info.value.ctx is K1
    assert isinstance(dyn_invert(K2.gen, K2), type(K2.gen))    # z2 itself is a unit


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_inverse_property_in_cubic_field(cs):
    K = DynamicContext(QQ, U("z^3 - 2"))      # irreducible: every nonzero element is a unit
    a = K.zero
    for i, c in enumerate(cs):
        a = a + K.gen ** i * c
    if not any(cs):
        return
    assert a * dyn_invert(a, K) == K.one
