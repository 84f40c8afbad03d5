"""Newton polygons, characteristic polynomials and polygon trees.

The support of F is the set of points ``(j, v_j)`` with ``v_j`` the
x-valuation of the coefficient of ``y^j``.  Only lower-hull edges of slope
``<= 0`` are kept: they carry the branches ``y(x)`` of nonnegative valuation.

A :class:`PolygonTree` is the discrete record of a Newton-Puiseux run: for
every edge its data ``(q, m, l)`` and the multiset of (degree, multiplicity)
pairs from the squarefree decomposition of its characteristic polynomial,
with one child for every squarefree part of multiplicity at least two.  A
child groups the roots of that part by the subtree they produce, so trees
computed over Q (dynamic evaluation) and over F_q (genuine factorization)
are directly comparable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bpoly import BiPoly, bezout_pair, coerce_field, edge_transform, is_squarefree_y
from .dynamic import DynamicContext, ZeroDivisorSplit
from .errors import InternalError, NotSquarefree, ZeroPolynomial
from .upoly import UniPoly, factor_fq, squarefree_decomposition


@dataclass(frozen=True)
class Edge:
    """Edge of slope ``-m/q`` on the line ``q*v + m*j = l`` between ``j0 < j1``."""

    q: int
    m: int
    l: int
    j0: int
    j1: int

    @property
    def slope(self):
        return Fraction(-self.m, self.q)

    @property
    def width(self):
        return self.j1 - self.j0

    def data(self):
        return (self.q, self.m, self.l)


@dataclass(frozen=True)
class NewtonPolygon:
    edges: tuple
    points: tuple        # support points (j, v_j), j increasing

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)


def support(F: BiPoly):
    return tuple((j, a.valuation()) for j, a in enumerate(F.coeffs) if a)


def newton_polygon(F: BiPoly, min_m: int = 0) -> NewtonPolygon:
    """Lower convex hull edges of slope ``-m/q`` with ``m >= min_m``.

    ``min_m=1`` restricts to the principal part (branches tending to 0).
    """
    if F.is_zero():
        raise ZeroPolynomial("Newton polygon of zero")
    pts = support(F)
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (j1, v1), (j2, v2) = hull[-2], hull[-1]
            # drop hull[-1] unless it is strictly below the chord
            if (v2 - v1) * (pt[0] - j1) >= (pt[1] - v1) * (j2 - j1):
                hull.pop()
            else:
                break
        hull.append(pt)
    edges = []
    for (j0, v0), (j1, v1) in zip(hull, hull[1:]):
        dv, dj = v0 - v1, j1 - j0
        if dv < 0:
            break
        g = math.gcd(dv, dj)
        q, m = dj // g, dv // g
        if m < min_m:
            break
        edges.append(Edge(q, m, q * v0 + m * j0, j0, j1))
    return NewtonPolygon(tuple(edges), pts)


def characteristic_poly(F: BiPoly, e: Edge) -> UniPoly:
    """``phi(T) = sum of coeff(x^i y^j) T^((j - j0)/q)`` over lattice points on the edge."""
    K = F.field
    out = []
    for t in range(e.width // e.q + 1):
        j = e.j0 + e.q * t
        num = e.l - e.m * j
        if num % e.q:
            out.append(K.zero)
            continue
        out.append(F.coeff(num // e.q, j))
    return UniPoly(K, out)


# ---------------------------------------------------------------------------
# polygon trees


@dataclass(frozen=True)
class EdgeNode:
    q: int
    m: int
    l: int
    profile: tuple       # sorted ((degree, multiplicity), ...)

    def key(self):
        return (self.q, self.m, self.l, self.profile)


@dataclass(frozen=True)
class PolygonTree:
    """One node of a polygon tree.

    ``children`` is a sorted tuple of ``(key, components)`` where ``key`` is
    ``(q, m, l, degree, multiplicity)`` of the squarefree part descended into
    and ``components`` is a sorted tuple of ``(root count, subtree)``.
    """

    edges: tuple
    children: tuple = ()
    y_content: int = 0

    def key(self):
        return (
            self.y_content,
            tuple(e.key() for e in self.edges),
            tuple((k, tuple((c, t.key()) for c, t in comps)) for k, comps in self.children),
        )

    @property
    def depth(self):
        return 1 + max((t.depth for _, comps in self.children for _, t in comps), default=0)

    def as_dict(self):
        return {
            "y_content": self.y_content,
            "edges": [{"q": e.q, "m": e.m, "l": e.l, "profile": [list(p) for p in e.profile]}
                      for e in self.edges],
            "children": [
                {"edge": list(k[:3]), "degree": k[3], "multiplicity": k[4],
                 "components": [{"count": c, "tree": t.as_dict()} for c, t in comps]}
                for k, comps in self.children
            ],
        }

    def to_text(self, indent=0):
        pad = "  " * indent
        lines = []
        if self.y_content:
            lines.append(f"{pad}y-content {self.y_content}")
        for e in self.edges:
            prof = ", ".join(f"({d},{m})" for d, m in e.profile)
            lines.append(f"{pad}edge (q={e.q}, m={e.m}, l={e.l}) profile {{{prof}}}")
        for k, comps in self.children:
            for c, t in comps:
                lines.append(f"{pad}child of edge {k[:3]} part (deg {k[3]}, mult {k[4]}) x{c}:")
                lines.append(t.to_text(indent + 1))
        return "\n".join(lines)


def tree_equal(a: PolygonTree, b: PolygonTree) -> bool:
    return a.key() == b.key()


def _merge(components):
    groups = {}
    for count, tree in components:
        k = tree.key()
        if k in groups:
            groups[k] = (groups[k][0] + count, tree)
        else:
            groups[k] = (count, tree)
    return tuple(sorted(groups.values(), key=lambda ct: (ct[0], ct[1].key())))


def _root_of_linear(g):
    g = g.monic()
    return -g.coeffs[0]


class _TreeBuilder:
    def __init__(self, rng, factorizer, max_depth):
        self.rng = rng
        self.factorizer = factorizer
        self.max_depth = max_depth

    def node(self, F, root, depth):
        if depth > self.max_depth:
            raise InternalError(f"polygon tree deeper than {self.max_depth}")
        yc = F.y_content()
        if yc:
            F = F.div_y(yc)
        edges, children = [], []
        if F.deg_y > 0:
            for e in newton_polygon(F, 0 if root else 1):
                phi = characteristic_poly(F, e)
                sqf = squarefree_decomposition(phi)
                edges.append(EdgeNode(e.q, e.m, e.l, sqf.profile()))
                for g, mult in sqf.parts:
                    if mult >= 2:
                        comps = self.child(F, e, g, depth)
                        children.append(((e.q, e.m, e.l, g.degree, mult), _merge(comps)))
        children.sort(key=lambda kc: (kc[0], tuple((c, t.key()) for c, t in kc[1])))
        return PolygonTree(tuple(edges), tuple(children), yc)

    def descend(self, F, e, K2, embed, xi, depth):
        u, v = bezout_pair(e.q, e.m)
        F2 = edge_transform(coerce_field(F, K2, embed), e, xi, u, v)
        return self.node(F2, False, depth + 1)

    def child(self, F, e, g, depth):
        K = F.field
        if K.order is not None:
            from .extension import extend_field
            out = []
            for h, _ in factor_fq(g, self.rng).factors:
                ext = extend_field(K, h)
                out.append((h.degree, self.descend(F, e, ext.field, ext.embed, ext.root, depth)))
            return out
        if self.factorizer is not None:
            pending = list(self.factorizer(g))
        else:
            pending = [g]
        out = []
        while pending:
            h = pending.pop()
            if h.degree == 1:
                out.append((1, self.descend(F, e, K, None, _root_of_linear(h), depth)))
                continue
            K2 = DynamicContext(K, h)
            try:
                out.append((h.degree, self.descend(F, e, K2, K2.lift, K2.gen, depth)))
            except ZeroDivisorSplit as s:
                if s.ctx is not K2:
                    raise
                if self.factorizer is not None:
                    raise ValueError(f"factorizer returned the reducible factor {h.to_str('T')}") from None
                pending.extend([s.h1, s.h2])
        return out


def depth_bound(F: BiPoly) -> int:
    """Crude bound on the recursion depth: degY plus the degree of the discriminant."""
    return F.deg_y + (2 * F.deg_y - 1) * max(F.deg_x, 0) + 1


def polygon_tree(F: BiPoly, rng=None, factorizer=None, check=True) -> PolygonTree:
    """Polygon tree of F above x = 0.

    Over finite fields characteristic polynomials are factored; over Q (and
    other infinite fields) the recursion runs in dynamic-evaluation quotient
    rings, unless ``factorizer`` supplies irreducible factorizations of the
    squarefree parts.  Squarefreeness in y is checked through the
    discriminant when the characteristic is 0 or exceeds deg_y.
    """
    if F.is_zero():
        raise ZeroPolynomial("polygon tree of zero")
    p = F.field.characteristic
    if check and F.deg_y >= 1 and (p == 0 or p > F.deg_y):
        if not is_squarefree_y(F):
            raise NotSquarefree("F is not squarefree in y")
    return _TreeBuilder(rng, factorizer, depth_bound(F)).node(F, True, 0)


# ---------------------------------------------------------------------------
# SVG


def polygon_svg(F: BiPoly, scale: int = 40) -> str:
    """Static SVG of the support, the retained hull edges and their labels."""
    poly = newton_polygon(F)
    pts = poly.points
    jmax = max(j for j, _ in pts)
    vmax = max(v for _, v in pts)
    margin = scale
    width = (jmax + 2) * scale
    height = (vmax + 2) * scale

    def X(j):
        return margin + j * scale

    def Y(v):
        return height - margin - v * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + margin}" height="{height}" '
           f'viewBox="0 0 {width + margin} {height}">',
           '<g stroke="#ddd" stroke-width="1">']
    for j in range(jmax + 1):
        out.append(f'<line x1="{X(j)}" y1="{Y(0)}" x2="{X(j)}" y2="{Y(vmax)}"/>')
    for v in range(vmax + 1):
        out.append(f'<line x1="{X(0)}" y1="{Y(v)}" x2="{X(jmax)}" y2="{Y(v)}"/>')
    out.append("</g>")
    out.append(f'<text x="{X(jmax) + 8}" y="{Y(0) + 4}" font-size="12">j</text>')
    out.append(f'<text x="{X(0) - 4}" y="{Y(vmax) - 8}" font-size="12">v</text>')
    for e in poly.edges:
        v0 = (e.l - e.m * e.j0) // e.q
        v1 = (e.l - e.m * e.j1) // e.q
        out.append(f'<line x1="{X(e.j0)}" y1="{Y(v0)}" x2="{X(e.j1)}" y2="{Y(v1)}" '
                   f'stroke="#c33" stroke-width="2"/>')
        mx, my = (X(e.j0) + X(e.j1)) / 2, (Y(v0) + Y(v1)) / 2
        out.append(f'<text x="{mx + 6}" y="{my - 6}" font-size="12" fill="#c33">'
                   f'({e.q}, {e.m}, {e.l})</text>')
    for j, v in pts:
        out.append(f'<circle cx="{X(j)}" cy="{Y(v)}" r="4" fill="#225"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
