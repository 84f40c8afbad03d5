"""Flat field extensions: adjoin a root of an irreducible polynomial.

Extending ``F_p[z]/(m)`` by a root of an irreducible ``g`` of degree ``f``
yields a fresh single-level context ``F_p[w]/(M)`` of degree ``k*f``.  The
generator ``w = T + c*z`` of the tower is found by trying ``c = 0, 1, ...``;
its minimal polynomial ``M`` and the images of ``z`` and ``T`` come from
linear algebra over F_p.  Everything is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .fields import FqContext, fq_make
from .upoly import UniPoly


@dataclass(frozen=True)
class Extension:
    field: FqContext
    embed: Callable
    root: object          # a root of g in ``field``
    degree: int           # relative degree f


def _solve(columns, targets, p):
    """Solve ``sum_i c_i * columns[i] = t`` for each target; None if singular."""
    n = len(columns)
    # rows of the augmented matrix: equation index r
    mat = [[columns[i][r] for i in range(n)] + [t[r] for t in targets] for r in range(n)]
    width = n + len(targets)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] % p), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = pow(mat[col][col], -1, p)
        row = [x * inv % p for x in mat[col]]
        mat[col] = row
        for r in range(n):
            if r != col and mat[r][col]:
                c = mat[r][col]
                mat[r] = [(a - c * b) % p for a, b in zip(mat[r], row)]
    return [[mat[r][n + t] for r in range(n)] for t in range(width - n)]


def _identity(a):
    return a


@lru_cache(maxsize=4096)
def _extend(K, gkey):
    g = UniPoly(K, [K(list(c)) for c in gkey])
    f = g.degree
    p, k = K.p, K.k
    if f == 1:
        return Extension(K, _identity, -g.coeffs[0], 1)
    if k == 1:
        L = fq_make(p, [c.rep[0] for c in g.coeffs], check=False)

        def embed(a, L=L):
            return L(a.rep[0])
        return Extension(L, embed, L.gen, f)

    n = k * f

    def vec(e):
        out = []
        for j in range(f):
            out.extend(e[j].rep)
        return out

    T = UniPoly.x(K)
    zc = UniPoly(K, [K.gen])
    for c in range(p):
        w = T + UniPoly(K, [K.gen * c])
        powers = [UniPoly.one(K)]
        for _ in range(n):
            powers.append(powers[-1] * w % g)
        cols = [vec(pw) for pw in powers[:n]]
        sol = _solve(cols, [vec(powers[n]), vec(zc), vec(T)], p)
        if sol is None:
            continue
        top, zimg, timg = sol
        M = [(-a) % p for a in top] + [1]
        L = fq_make(p, M, check=False)
        alpha = L(zimg)
        apows = [L.one]
        for _ in range(k - 1):
            apows.append(apows[-1] * alpha)

        def embed(a, L=L, apows=apows):
            acc = L.zero
            for r, ap in zip(a.rep, apows):
                if r:
                    acc = acc + ap * r
            return acc
        return Extension(L, embed, L(timg), f)
    raise RuntimeError("no primitive element found")  # unreachable for finite fields


def extend_field(K: FqContext, g: UniPoly) -> Extension:
    """Adjoin a root of the monic irreducible ``g`` over ``K``."""
    g = g.monic()
    return _extend(K, tuple(c.rep for c in g.coeffs))
