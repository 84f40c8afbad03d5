import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import P, Pp
from modpuiseux.bpoly import BiPoly, reduce_mod_p
from modpuiseux.errors import NotSquarefree, ZeroPolynomial
from modpuiseux.fields import QQ, prime_field
from modpuiseux.parsing import parse_unipoly
from modpuiseux.polygon import (characteristic_poly, newton_polygon, polygon_svg, polygon_tree,
                                support, tree_equal)


def edges(F):
    return [(e.q, e.m, e.l, e.j0, e.j1) for e in newton_polygon(F)]


def test_polygon_examples():
    assert edges(P("y^2 - x^3")) == [(2, 3, 6, 0, 2)]
    assert edges(P("y^2 - x^2 - x^3")) == [(1, 1, 2, 0, 2)]
    assert edges(P("y - x"))[0][:3] == (1, 1, 1)


def test_polygon_keeps_slope_zero_and_drops_positive_slopes():
    F = P("x*y^3 + y^2 - x^2")        # points (0,2), (2,0), (3,1)
    assert edges(F) == [(1, 1, 2, 0, 2)]
    assert edges(P("y^2 - 1 + x")) == [(1, 0, 0, 0, 2)]
    assert newton_polygon(P("y^2 - 1 + x"), min_m=1).edges == ()


def test_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        newton_polygon(BiPoly(QQ, []))


@st.composite
def curves(draw):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 5)),
                                 st.integers(-3, 3).filter(bool), min_size=1, max_size=9))
    return BiPoly.from_dict(QQ, terms)


@settings(max_examples=150, deadline=None)
@given(curves())
def test_hull_invariants(F):
    poly = newton_polygon(F)
    pts = support(F)
    for e in poly:
        assert all(e.q * v + e.m * j >= e.l for j, v in pts)
        on = [(j, v) for j, v in pts if e.q * v + e.m * j == e.l]
        assert min(on)[0] == e.j0 and max(on)[0] == e.j1
        phi = characteristic_poly(F, e)
        assert phi.degree * e.q == e.width
        assert phi[0] and phi.lc == F.coeff((e.l - e.m * e.j1) // e.q, e.j1)
    slopes = [e.slope for e in poly]
    assert slopes == sorted(slopes) and len(set(slopes)) == len(slopes)
    for a, b in zip(poly.edges, poly.edges[1:]):
        assert a.j1 == b.j0


def test_edges_tile_when_all_slopes_kept():
    F = P("y^4 - x*y^2 + x^5 + x^3*y")
    tot = sum(e.width for e in newton_polygon(F))
    assert tot == F.deg_y - support(F)[0][0]


def test_characteristic_poly_examples():
    node = P("y^2 - x^2 - x^3")
    e = newton_polygon(node).edges[0]
    assert characteristic_poly(node, e) == parse_unipoly("z^2 - 1", QQ)
    assert characteristic_poly(P("y^2 - x^3"), newton_polygon(P("y^2 - x^3")).edges[0]).to_str("T") == "T - 1"
    F2 = Pp("y^2 - x^2 - x^3", 2)
    phi = characteristic_poly(F2, newton_polygon(F2).edges[0])
    assert phi == parse_unipoly("(z + 1)^2", prime_field(2))


def test_tree_examples():
    t = polygon_tree(P("y^2 - x^3"))
    assert [e.key() for e in t.edges] == [(2, 3, 6, ((1, 1),))] and not t.children
    t = polygon_tree(P("y^2 - x^2 - x^3"))
    assert [e.key() for e in t.edges] == [(1, 1, 2, ((2, 1),))] and not t.children
    t2 = polygon_tree(Pp("y^2 - x^2 - x^3", 2), check=False)
    assert [e.key() for e in t2.edges] == [(1, 1, 2, ((1, 2),))] and len(t2.children) == 1


def test_tree_equality_examples():
    cusp = P("y^2 - x^3")
    assert tree_equal(polygon_tree(cusp), polygon_tree(reduce_mod_p(cusp, 5)))
    node = P("y^2 - x^2 - x^3")
    assert not tree_equal(polygon_tree(node), polygon_tree(reduce_mod_p(node, 2), check=False))
    t = polygon_tree(node)
    assert tree_equal(t, t)


def test_not_squarefree():
    with pytest.raises(NotSquarefree):
        polygon_tree(P("(y - x)^2"))


def test_y_content_reported_separately():
    t = polygon_tree(P("y^3 - x^2*y"))
    assert t.y_content == 1
    assert [e.key() for e in t.edges] == [(1, 1, 2, ((2, 1),))]


def test_depth_can_exceed_deg_y():
    # y = x + x^2 + x^3 +- x^(7/2): each level repeats phi = (T - 1)^2
    t = polygon_tree(P("(y - x - x^2 - x^3)^2 - x^7"))
    assert t.depth > 2


@pytest.mark.parametrize("text", [
    "(y^2-x^2)^2-x^5*(y-x)",
    "(y^3-x^3)^2 - x^7*(y-x)",
    "(y^2-2*x^2)^2-x^5*(y^2-2*x^2+x^3)",
    "(y^4-x^4)^2-x^9",
])
def test_dynamic_tree_matches_good_reduction(text):
    F = P(text)
    tq = polygon_tree(F)
    for p in (10007, 10009):
        assert tree_equal(tq, polygon_tree(reduce_mod_p(F, p)))


def test_tree_independent_of_rng():
    F = reduce_mod_p(P("(y^3-x^3)^2 - x^7*(y-x)"), 13)
    keys = {polygon_tree(F, rng=random.Random(s)).key() for s in range(5)}
    assert len(keys) == 1


def test_svg_output():
    svg = polygon_svg(P("y^2 - x^3"))
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert "(2, 3, 6)" in svg and svg.count("<circle") == 2
