import json
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from conftest import P, Pp
from modpuiseux.bpoly import BiPoly, is_squarefree_y
from modpuiseux.errors import NotSquarefree, SmallCharacteristic, TruncationTooSmall
from modpuiseux.fields import prime_field
from modpuiseux.puiseux import (RationalPuiseuxExpansion, max_determined_order, newton_lift, places_above,
                                rnpuiseux, singular_part, verify_expansion)


def terms_int(x):
    return [(n, int(c)) for n, c in x.terms]


def binom_half(n):
    out = Fraction(1)
    for i in range(n):
        out *= (Fraction(1, 2) - i) / (i + 1)
    return out


def test_cusp_over_f5():
    F = Pp("y^2 - x^3", 5)
    ps = rnpuiseux(F, 8)
    (x,) = ps.expansions
    assert (x.e, x.f, int(x.lam), terms_int(x)) == (2, 1, 1, [(3, 1)])
    assert verify_expansion(F, x, 20)


def test_node_over_f7_matches_binomial_series():
    p = 7
    F = Pp("y^2 - x^2 - x^3", p)
    ps = rnpuiseux(F, 6)
    assert [(x.e, x.f) for x in ps.expansions] == [(1, 1), (1, 1)]
    # Y = +- x (1 + x)^(1/2)
    series = [(n + 1, binom_half(n)) for n in range(5)]
    plus = [(n, c.numerator * pow(c.denominator, -1, p) % p) for n, c in series]
    minus = [(n, -c % p) for n, c in plus]
    got = sorted(terms_int(x) for x in ps.expansions)
    assert got == sorted([[t for t in plus if t[1]], [t for t in minus if t[1]]])
    assert plus[1] == (2, 4)
    for x in ps.expansions:
        assert verify_expansion(F, x, 6)


def test_residue_degree_two():
    F = Pp("y^2 + 1", 3)
    (x,) = rnpuiseux(F, 4).expansions
    assert (x.e, x.f, x.field.order) == (1, 2, 9)
    beta = dict(x.terms)[0]
    assert beta * beta + 1 == 0


def test_singular_part_examples():
    (x,) = singular_part(Pp("y^2 - x^3", 5)).expansions
    assert (x.e, terms_int(x), x.trunc) == (2, [(3, 1)], 4)
    (x,) = singular_part(Pp("y - x - x^2", 7)).expansions
    assert (x.e, x.f, x.terms, x.trunc) == (1, 1, (), 1)
    ps = singular_part(Pp("(y - x)*(y + x)", 7))
    assert sorted(terms_int(x) for x in ps.expansions) == [[(1, 1)], [(1, 6)]]
    assert all(x.e == 1 and x.exact for x in ps.expansions)


def test_places_above_examples():
    F = Pp("y^2 - x^3 + x", 7)
    (x,) = places_above(F, 1, 6).expansions
    assert x.e == 2 and verify_expansion(F, x, max_determined_order(F, x))
    ps = places_above(F, None, 6)
    assert [(x.e, x.f) for x in ps.expansions] == [(2, 1)] and ps.conservation == 2
    G = Pp("x*y - 1", 5)
    (x,) = places_above(G, 0, 4).expansions
    assert x.pole and x.e == 1 and terms_int(x) == [(1, 1)]
    assert verify_expansion(G, x, 8)


def test_verify_expansion_examples():
    F = Pp("y^2 - x^3", 11)
    K = F.field
    good = RationalPuiseuxExpansion(K.zero, K.one, 2, 1, ((3, K.one),), 8, K)
    bad = RationalPuiseuxExpansion(K.zero, K.one, 2, 1, ((3, K.one), (4, K.one)), 8, K)
    assert verify_expansion(F, good, 20)
    assert not verify_expansion(F, bad, 8)
    assert verify_expansion(F, bad, 7)             # the error term is 2 T^7
    empty = RationalPuiseuxExpansion(K.zero, K.one, 1, 1, (), 5, K)
    assert verify_expansion(Pp("y", 11), empty, 30)


def test_errors():
    with pytest.raises(SmallCharacteristic):
        rnpuiseux(Pp("y^3 - x", 3), 4)
    with pytest.raises(NotSquarefree):
        rnpuiseux(Pp("(y - x)^2", 7), 4)
    with pytest.raises(TruncationTooSmall) as info:
        rnpuiseux(Pp("y^2 - x^3", 5), 2)
    assert info.value.minimal == 4


def test_newton_lift_catalan():
    # y = x + y^2 has the root sum_{n>=1} C_{n-1} x^n
    p = 10007
    F = Pp("y^2 - y + x", p)
    Y = newton_lift(F, 12)
    catalan = [1]
    for n in range(1, 12):
        catalan.append(catalan[-1] * 2 * (2 * n - 1) // (n + 1))
    assert [int(c) for c in Y] == [0] + [c % p for c in catalan[:11]]


@st.composite
def random_curves(draw, p=101):
    K = prime_field(p)
    N = draw(st.integers(1, 4))
    terms = {(0, N): 1}
    for _ in range(draw(st.integers(1, 7))):
        terms[(draw(st.integers(0, 5)), draw(st.integers(0, N - 1)))] = draw(st.integers(1, p - 1))
    return BiPoly.from_dict(K, terms)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(random_curves(), st.integers(0, 100))
def test_residuals_and_conservation_on_random_curves(F, c):
    assume(is_squarefree_y(F) and F.x_content() == 0)
    ps = rnpuiseux(F, 10)
    if not F.lc_y()[0] == 0:
        assert ps.conservation == F.deg_y
    for x in ps.expansions:
        assert verify_expansion(F, x, max_determined_order(F, x))
    x0 = F.field(c)
    assume(F.coeffs and all(a(x0) == 0 for a in F.coeffs) is False)
    pa = places_above(F, x0, 6)
    assert pa.conservation == F.deg_y
    for x in pa.expansions:
        assert verify_expansion(F, x, max_determined_order(F, x))
        ns = [n for n, _ in x.terms]
        assert ns == sorted(set(ns)) and all(n < x.trunc for n in ns)
        assert all(b for _, b in x.terms)


def test_determinism_and_seed_independence():
    F = Pp("(y^3 - x^3)^2 - x^7*(y - x)", 13)
    runs = [rnpuiseux(F, 12, random.Random(s)) for s in range(4)]
    dumps = {json.dumps(r.as_dict()) for r in runs}
    assert len(dumps) == 1
    sigs = [Counter(x.signature() for x in r.expansions) for r in runs]
    assert all(s == sigs[0] for s in sigs)


def test_json_layout():
    d = rnpuiseux(Pp("y^2 - x^3", 5), 8).as_dict()
    assert list(d) == ["center", "expansions"]
    assert list(d["expansions"][0])[:6] == ["e", "f", "field", "lambda", "terms", "trunc"]
    assert d["expansions"][0]["terms"] == [[3, [1]]]


def test_deeper_extension_bookkeeping():
    # the place y^2 = 2 x^2 (1 + ...) needs sqrt(2), absent from F_5
    F = Pp("y^2 - 2*x^2 - x^3", 5)
    (x,) = rnpuiseux(F, 8).expansions
    assert (x.e, x.f) == (1, 2)
    assert verify_expansion(F, x, max_determined_order(F, x))
    G = Pp("(y^2 - 2*x^3)^2 - x^7", 11)
    for x in places_above(G, 0, 16).expansions:
        assert verify_expansion(G, x, max_determined_order(G, x))
