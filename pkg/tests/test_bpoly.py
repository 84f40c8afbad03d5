import random
from fractions import Fraction

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import assume, given, settings, strategies as st

from conftest import P, Pp
from modpuiseux.bpoly import (BiPoly, bezout_pair, discriminant_y, edge_transform, integer_discriminant,
                              invert_x, invert_y, is_squarefree_y, reduce_mod_p, resultant_y, shift_x)
from modpuiseux.errors import BadPrimeDenominator, NonExactDivision, ParseError
from modpuiseux.fields import QQ, prime_field
from modpuiseux.polygon import Edge
from modpuiseux.upoly import UniPoly

x, y = sympy.symbols("x y")


def to_sympy(F):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**i * y**j for i, j, c in F.terms())


def uni_to_sympy(u):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(u.coeffs))


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def bipolys(draw, max_y=4, max_x=4):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, max_x), st.integers(0, max_y)), small_q, max_size=8))
    return BiPoly.from_dict(QQ, terms)


# -- parsing ---------------------------------------------------------------------------------


def test_parse_grammar():
    F = P("y^2 - x^3 + (1/2)*x*y")
    assert F.coeff(3, 0) == -1 and F.coeff(1, 1) == Fraction(1, 2) and F.coeff(0, 2) == 1
    assert P("2xy") == P("2*x*y") == P("x**1 * y * 2")
    assert P("x^2/4") == P("(1/4)x^2")
    assert P(" - (y - x)^2 ") == P("-y^2 + 2*x*y - x^2")


@pytest.mark.parametrize("bad", ["", "y^", "x/y", "2*z", "y +", "(x", "y^-1", "x $ y"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


@settings(max_examples=100, deadline=None)
@given(bipolys())
def test_print_parse_round_trip(F):
    assert P(F.to_str()) == F if not F.is_zero() else True


def test_x_valuation():
    F = P("y^2 - x^3")
    assert F.x_valuation(0) == 3
    assert F.x_valuation(1) == float("inf")
    assert F.x_valuation(2) == 0


# -- reduction -------------------------------------------------------------------------------


def test_reduce_mod_p_examples():
    assert Pp("y^2 - x^3", 5) == BiPoly.from_dict(prime_field(5), {(0, 2): 1, (3, 0): 4})
    with pytest.raises(BadPrimeDenominator):
        Pp("(1/2)*y + x", 2)
    assert Pp("(1/3)*y", 5) == BiPoly.from_dict(prime_field(5), {(0, 1): 2})


@settings(max_examples=50, deadline=None)
@given(bipolys(3, 3), bipolys(3, 3))
def test_reduce_commutes_with_ring_ops(F, G):
    p = 7
    assert reduce_mod_p(F * G, p) == reduce_mod_p(F, p) * reduce_mod_p(G, p)
    assert reduce_mod_p(F + G, p) == reduce_mod_p(F, p) + reduce_mod_p(G, p)


# -- resultants and discriminants -------------------------------------------------------------


def test_discriminant_examples():
    X = UniPoly.x(QQ)
    assert discriminant_y(P("y^2 - x^3")) == 4 * X**3
    assert discriminant_y(P("y^2 - x^3 + x")) == 4 * X**3 - 4 * X
    assert integer_discriminant(P("y^2 - x^3")) == UniPoly(QQ, [0, 0, 0, 4])


@settings(max_examples=40, deadline=None)
@given(bipolys(4, 3))
def test_discriminant_matches_sympy(F):
    assume(F.deg_y >= 1)
    ref = sympy.discriminant(sympy.Poly(to_sympy(F), y)).as_expr()
    assert sympy.expand(uni_to_sympy(discriminant_y(F)) - ref) == 0


@settings(max_examples=40, deadline=None)
@given(bipolys(3, 3), bipolys(3, 3))
def test_resultant_matches_sympy(F, G):
    assume(F.deg_y >= 1 and G.deg_y >= 1)
    ours = resultant_y(list(F.coeffs), list(G.coeffs))
    # Sylvester determinant; sympy.resultant mishandles some constant-tail cases
    ref = sylvester(to_sympy(F), to_sympy(G), y).det()
    assert sympy.expand(uni_to_sympy(ours) - ref) == 0


@settings(max_examples=40, deadline=None)
@given(bipolys(3, 3), bipolys(2, 2))
def test_discriminant_vanishes_on_planted_squares(F, G):
    assume(G.deg_y >= 1 and F.deg_y >= 0 and not F.is_zero())
    H = F * G * G
    assert discriminant_y(H).is_zero()
    assert not is_squarefree_y(H)


def test_is_squarefree_y_agrees_with_discriminant():
    rng = random.Random(3)
    K = prime_field(11)
    for _ in range(40):
        terms = {(rng.randrange(4), rng.randrange(4)): rng.randrange(11) for _ in range(5)}
        terms[(0, 3)] = 1
        F = BiPoly.from_dict(K, terms)
        assert is_squarefree_y(F) == (not discriminant_y(F).is_zero())


# -- substitutions ---------------------------------------------------------------------------


def test_substitution_examples():
    assert shift_x(P("y^2 - x"), QQ(1)) == P("y^2 - x - 1")
    assert invert_y(P("y^2 - x")) == P("1 - x*y^2")
    assert invert_x(P("y - x^2")) == P("y*x^2 - 1")


@pytest.mark.parametrize("q,m", [(2, 3), (1, 1), (3, 2), (5, 7), (4, 1), (1, 0)])
def test_bezout_pair(q, m):
    u, v = bezout_pair(q, m)
    assert u * q - v * m == 1 and 0 <= v < q


def test_edge_transform_examples():
    K = prime_field(7)
    F = Pp("y^2 - x^3", 7)
    assert edge_transform(F, Edge(2, 3, 6, 0, 2), K.one, 2, 1) == Pp("y^2 + 2*y", 7)
    G = Pp("y^2 - x^2", 7)
    assert edge_transform(G, Edge(1, 1, 2, 0, 2), K.one, 1, 0) == Pp("y^2 + 2*y", 7)


def test_horizontal_edge_is_a_shift():
    # slope-0 edges carry the valuation-0 places: F(x, xi + y)
    F = Pp("y^2 - 1 - x", 7)
    K = F.field
    assert edge_transform(F, Edge(1, 0, 0, 0, 2), K.one, 1, 0) == Pp("y^2 + 2*y - x", 7)


def test_edge_transform_rejects_bad_edges():
    F = Pp("y^2 - x^3", 7)
    K = F.field
    with pytest.raises(ValueError):
        edge_transform(F, Edge(2, 4, 12, 0, 2), K.one, 1, 0)
    with pytest.raises(NonExactDivision):
        edge_transform(F, Edge(2, 3, 7, 0, 2), K.one, 2, 1)


def test_edge_transform_identity_at_random_points():
    # F(xi^v t^q, t^m (xi^u + s)) = t^l F'(t, s)
    p = 101
    K = prime_field(p)
    F = Pp("(y^2 - 2*x^3)^2 - x^7 + 3*x^5*y", p)
    e = Edge(2, 3, 12, 0, 4)
    xi = K(2)
    u, v = bezout_pair(2, 3)
    G = edge_transform(F, e, xi, u, v)
    rng = random.Random(5)
    for _ in range(25):
        t, s = K(rng.randrange(1, p)), K(rng.randrange(p))
        assert F(xi**v * t**2, t**3 * (xi**u + s)) == t**12 * G(t, s)
