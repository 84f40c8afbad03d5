import math

import pytest
import sympy

from conftest import P
from modpuiseux.bench import bench_run, cusp, dense, family_curve, loglog_slope, tower
from modpuiseux.bpoly import reduce_mod_p
from modpuiseux.polygon import polygon_tree
from modpuiseux.puiseux import rnpuiseux


def test_cusp_family():
    assert cusp(3) == P("y^3 - x^4")
    with pytest.raises(ValueError):
        cusp(0)


def test_tower_root():
    # tower(2) vanishes on y = 2 t^2 + 3 t^3 with x = t^4
    t, y = sympy.symbols("t y")
    F = tower(2)
    expr = sum(int(c) * t ** (4 * i) * (2 * t**2 + 3 * t**3) ** j for i, j, c in F.terms())
    assert sympy.expand(expr) == 0
    assert F.deg_y == 4


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tower_single_place_and_depth(k):
    F = tower(k)
    (x,) = rnpuiseux(reduce_mod_p(F, 10007), 2 ** (k + 1)).expansions
    assert (x.e, x.f) == (2**k, 1)
    assert polygon_tree(F).depth == k


def test_dense_fixed_seed():
    F = dense(4, 0)
    assert F == dense(4, 0) and F != dense(4, 1)
    assert F.deg_y == 4 and F.lc_y().degree == 0 and F.lc_y()[0] == 1
    assert max(i + j for i, j, _ in F.terms()) == 4
    x, y = sympy.symbols("x y")
    expr = sum(int(c) * x**i * y**j for i, j, c in F.terms())
    assert sympy.discriminant(expr, y) != 0
    with pytest.raises(ValueError):
        family_curve("spiral", 3)


def test_slope_helper():
    xs = [2, 4, 8, 16]
    assert loglog_slope(xs, [3 * x**2 for x in xs]) == pytest.approx(2.0)
    assert loglog_slope(xs, [5.0] * 4) == pytest.approx(0.0)
    assert loglog_slope([3], [1.0]) is None
    assert loglog_slope([3, 3], [1.0, 2.0]) is None


def test_records_and_determinism():
    a = bench_run("dense", [3], seed=4, runs=5, min_batch=0.001)
    b = bench_run("dense", [3], seed=4, runs=5, min_batch=0.001)
    strip = lambda r: {k: v for k, v in r.as_dict().items() if k != "time"}
    assert [strip(r) for r in a.records] == [strip(r) for r in b.records]
    assert a.slope is None
    r = a.records[0]
    assert r.runs >= 5 and r.d == 3 and r.delta >= r.d and r.time > 0
    assert r.peak_bits_mod <= 62 and sympy.isprime(r.p) and r.p.bit_length() == 62


def test_cusp_delta_grows():
    res = bench_run("cusp", [2, 3, 4, 5, 6], runs=5, min_batch=0.001, q_growth=False)
    deltas = [r.delta for r in res.records]
    assert deltas == sorted(deltas) and len(set(deltas)) == len(deltas)
    assert all(r.delta >= r.d for r in res.records)
    assert res.slope is not None and math.isfinite(res.slope)
    assert all(r.peak_bits_q is None for r in res.records)
