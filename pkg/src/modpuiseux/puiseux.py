"""Rational Newton-Puiseux expansions over finite fields.

Each place of F above a center is described once (conjugate branches are
not enumerated) by a parametrization ``X(T) = x0 + lam*T^e``,
``Y(T) = sum(beta_i T^{n_i})`` with coefficients in an extension of degree
``f`` of the base field.  The recursion follows the Newton polygon: every
irreducible factor of an edge's characteristic polynomial adjoins a root,
the polynomial is transformed by :func:`edge_transform`, and the branch is
followed until its y = 0 root is simple.  From there Newton iteration
supplies the remaining coefficients, doubling the precision at every step.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from .bpoly import (BiPoly, bezout_pair, coerce_field, edge_transform, invert_x, invert_y,
                    is_squarefree_y, shift_x)
from .dynamic import DynamicContext, Split, ZeroDivisorSplit, dyn_invert
from .errors import InputError, InternalError, NotSquarefree, SmallCharacteristic, TruncationTooSmall
from .extension import extend_field
from .fields import FqContext, FqElement
from .polygon import characteristic_poly, newton_polygon
from .upoly import factor_fq

__all__ = [
    "RationalPuiseuxExpansion", "PlaceSet", "rnpuiseux", "singular_part", "places_above",
    "verify_expansion", "max_determined_order", "DynamicContext", "dyn_invert", "Split",
    "ZeroDivisorSplit", "newton_lift",
]

INFINITY = None


@dataclass(frozen=True, eq=False)
class RationalPuiseuxExpansion:
    """One place: ``X = x0 + lam*T^e`` (``X = lam*T^-e`` at infinity), ``Y = sum beta*T^n``.

    For pole branches (``pole=True``) the terms describe ``1/Y``.  ``exact``
    marks expansions whose terms are the complete series.
    """

    center: Optional[FqElement]
    lam: FqElement
    e: int
    f: int
    terms: tuple
    trunc: int
    field: FqContext
    pole: bool = False
    exact: bool = False
    source_field: object = dc_field(default=None, repr=False)
    embed: Callable = dc_field(default=None, repr=False)

    def sort_key(self):
        first = self.terms[0][0] if self.terms else -1
        return (self.e, self.f, self.pole, first,
                tuple((n, c.rep) for n, c in self.terms), self.lam.rep)

    def signature(self):
        """Data invariant under conjugation: (e, f, exponents, #terms)."""
        return (self.e, self.f, self.pole, tuple(n for n, _ in self.terms), len(self.terms))

    def as_dict(self):
        return {
            "e": self.e,
            "f": self.f,
            "field": {"p": self.field.p, "k": self.field.k, "modulus": list(self.field.modulus)},
            "lambda": list(self.lam.rep),
            "terms": [[n, list(c.rep)] for n, c in self.terms],
            "trunc": self.trunc,
            "pole": self.pole,
        }


@dataclass
class PlaceSet:
    center: Optional[FqElement]
    expansions: list
    deg_y: int = 0

    @property
    def conservation(self):
        return sum(x.e * x.f for x in self.expansions)

    @property
    def output_size(self):
        """Coefficient units: sum of ``f * trunc`` (dense F_q digits of every Y)."""
        return sum(x.f * x.trunc for x in self.expansions)

    def ramification(self):
        """Sum of ``f*(e - 1)`` over the places."""
        return sum(x.f * (x.e - 1) for x in self.expansions)

    def center_repr(self):
        if self.center is None:
            return "infinity"
        return list(self.center.rep)

    def as_dict(self):
        return {"center": self.center_repr(), "expansions": [x.as_dict() for x in self.expansions]}


# ---------------------------------------------------------------------------
# truncated power series (lists of coefficients)


def _ser_mul(a, b, n, zero):
    out = [zero] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j in range(min(len(b), n - i)):
                out[i + j] = out[i + j] + ai * b[j]
    return out


def _ser_inv(a, n, K):
    inv0 = K.inv(a[0])
    out = [inv0] + [K.zero] * (n - 1)
    for k in range(1, n):
        acc = K.zero
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = acc + a[i] * out[k - i]
        out[k] = -acc * inv0
    return out


def _eval_y(F, Y, n):
    """``F(x, Y(x)) mod x^n`` for a series ``Y``."""
    K = F.field
    zero = K.zero
    acc = [zero] * n
    for a in reversed(F.coeffs):
        acc = _ser_mul(acc, Y, n, zero)
        for i, c in enumerate(a.coeffs[:n]):
            acc[i] = acc[i] + c
    return acc


def _eval_xy(F, X, Y, n):
    """``F(X(T), Y(T)) mod T^n`` for series ``X`` and ``Y``."""
    K = F.field
    zero = K.zero
    acc = [zero] * n
    for a in reversed(F.coeffs):
        ax = [zero] * n
        for c in reversed(a.coeffs):
            ax = _ser_mul(ax, X, n, zero)
            ax[0] = ax[0] + c
        acc = _ser_mul(acc, Y, n, zero)
        acc = [u + w for u, w in zip(acc, ax)]
    return acc


def newton_lift(F: BiPoly, n: int):
    """Series root ``Y`` with ``Y(0) = 0`` and ``F(x, Y) = 0 mod x^n``.

    Requires ``F(0,0) = 0`` and ``dF/dy(0,0) != 0``.  Precision doubles per
    step; the residual valuation is checked against the expected bound at
    every step.
    """
    K = F.field
    zero = K.zero
    Y = [zero] * n
    Fy = F.diff_y()
    prec = 1
    while prec < n:
        prec2 = min(2 * prec, n)
        R = _eval_y(F, Y, prec2)
        if any(R[:prec]):
            raise InternalError(f"Newton iteration lost precision at order {prec}")
        D = _eval_y(Fy, Y, prec2 - prec)
        corr = _ser_mul(R[prec:prec2], _ser_inv(D, prec2 - prec, K), prec2 - prec, zero)
        for i, c in enumerate(corr):
            Y[prec + i] = Y[prec + i] - c
        prec = prec2
    if any(_eval_y(F, Y, n)):
        raise InternalError("Newton iteration did not converge")
    return Y


# ---------------------------------------------------------------------------
# recursion


@dataclass
class _State:
    field: object
    embed: Callable          # source field -> field
    lam: object
    e: int
    f: int
    S: dict                  # exponent -> coefficient
    c: object
    M: int

    def advance(self, edge, ext, u, v):
        L, emb = ext.field, ext.embed
        xi = ext.root
        q, m = edge.q, edge.m
        xv = xi ** v
        S = {}
        for n, s in self.S.items():
            S[q * n] = emb(s) * xv ** n
        c = emb(self.c)
        S[q * self.M + m] = S.get(q * self.M + m, L.zero) + c * xv ** self.M * xi ** u
        old = self.embed
        return _State(
            field=L,
            embed=old if ext.degree == 1 else (lambda a: emb(old(a))),
            lam=emb(self.lam) * xv ** self.e,
            e=self.e * q,
            f=self.f * ext.degree,
            S=S,
            c=c * xv ** self.M,
            M=q * self.M + m,
        )


class _Runner:
    def __init__(self, trunc, singular, rng, center, source_field, pole):
        self.trunc = trunc
        self.singular = singular
        self.rng = rng
        self.center = center
        self.source_field = source_field
        self.pole = pole
        self.out = []

    def emit(self, st, terms, trunc, exact):
        terms = tuple(sorted((n, c) for n, c in terms.items() if c and n < trunc)) \
            if isinstance(terms, dict) else terms
        self.out.append(RationalPuiseuxExpansion(
            center=self.center, lam=st.lam, e=st.e, f=st.f, terms=terms, trunc=trunc,
            field=st.field, pole=self.pole, exact=exact,
            source_field=self.source_field, embed=st.embed,
        ))

    def exact_branch(self, st):
        need = max(st.S, default=-1) + 1
        if self.singular:
            self.emit(st, dict(st.S), st.M + 1, True)
            return
        if self.trunc < need:
            raise TruncationTooSmall(self.trunc, need)
        self.emit(st, dict(st.S), self.trunc, True)

    def regular_branch(self, F, st):
        if self.singular:
            self.emit(st, dict(st.S), st.M + 1, False)
            return
        if self.trunc < st.M + 1:
            raise TruncationTooSmall(self.trunc, st.M + 1)
        Y = newton_lift(F, self.trunc - st.M)
        terms = dict(st.S)
        for i, y in enumerate(Y):
            if y:
                n = st.M + i
                terms[n] = terms.get(n, st.field.zero) + st.c * y
        self.emit(st, terms, self.trunc, False)

    def run(self, F, st, root):
        if F.coeffs[0].is_zero():
            self.exact_branch(st)
            F = F.div_y(1)
            if F.coeffs and F.coeffs[0].is_zero():
                raise NotSquarefree("y^2 divides a transformed polynomial")
        if F.deg_y == 0:
            return
        r = next((j for j, a in enumerate(F.coeffs) if a[0]), None)
        if r is None:
            raise InputError("the curve contains the vertical line through the center")
        if r == 1:
            self.regular_branch(F, st)
        K = F.field
        for e in newton_polygon(F, 0 if root else 1):
            if r == 1 and e.m > 0:
                continue
            u, v = bezout_pair(e.q, e.m)
            phi = characteristic_poly(F, e)
            for g, _ in factor_fq(phi, self.rng).factors:
                ext = extend_field(K, g)
                F2 = edge_transform(coerce_field(F, ext.field, ext.embed), e, ext.root, u, v)
                self.run(F2, st.advance(e, ext, u, v), False)


def _check_input(F, check_squarefree=True):
    K = F.field
    if not isinstance(K, FqContext):
        raise InputError("Puiseux expansions are computed over finite fields only")
    if K.p <= F.deg_y:
        raise SmallCharacteristic(f"characteristic {K.p} must exceed deg_y = {F.deg_y}")
    if check_squarefree and not is_squarefree_y(F):
        raise NotSquarefree("F is not squarefree in y")


def _initial_state(K):
    return _State(field=K, embed=_identity, lam=K.one, e=1, f=1, S={}, c=K.one, M=0)


def _identity(a):
    return a


def _expand_at_zero(G, trunc, singular, rng, center, source_field, poles):
    """Expansions of G above x = 0: nonnegative-valuation branches, then poles."""
    runner = _Runner(trunc, singular, rng, center, source_field, pole=False)
    runner.run(G, _initial_state(G.field), True)
    out = runner.out
    if poles and G.coeffs and not G.coeffs[-1][0]:
        prunner = _Runner(trunc, singular, rng, center, source_field, pole=True)
        prunner.run(invert_y(G), _initial_state(G.field), False)
        out = out + prunner.out
    out.sort(key=RationalPuiseuxExpansion.sort_key)
    return out


def rnpuiseux(F: BiPoly, trunc: int, rng=None, check=True) -> PlaceSet:
    """Rational Puiseux expansions of F above x = 0 with Y known below ``T^trunc``.

    Only branches of nonnegative valuation are returned; see
    :func:`places_above` for pole branches.
    """
    if trunc < 1:
        raise ValueError("trunc must be positive")
    _check_input(F, check)
    K = F.field
    exps = _expand_at_zero(F, trunc, False, rng, K.zero, K, poles=False)
    return PlaceSet(K.zero, exps, F.deg_y)


def singular_part(F: BiPoly, rng=None, check=True) -> PlaceSet:
    """Expansions truncated at the order where each branch becomes regular."""
    _check_input(F, check)
    K = F.field
    exps = _expand_at_zero(F, 1, True, rng, K.zero, K, poles=False)
    return PlaceSet(K.zero, exps, F.deg_y)


def places_above(F: BiPoly, x0, trunc=None, rng=None, check=True) -> PlaceSet:
    """All places of F above ``x0`` (an element or ``None`` for infinity), poles included.

    With ``trunc=None`` only singular parts are computed.
    """
    _check_input(F, check)
    singular = trunc is None
    if x0 is None:
        G = invert_x(F)
        K = F.field
    else:
        if not isinstance(x0, FqElement):
            x0 = F.field(x0)
        G = shift_x(F, x0)
        K = G.field
    if G.x_content() > 0:
        raise InputError("the curve contains a vertical line through the center")
    exps = _expand_at_zero(G, trunc or 1, singular, rng, x0, K, poles=True)
    if x0 is None:
        exps = [_at_infinity(x) for x in exps]
    ps = PlaceSet(x0, exps, F.deg_y)
    if ps.conservation != F.deg_y:
        raise InternalError(f"conservation failed at {ps.center_repr()}: {ps.conservation} != {F.deg_y}")
    return ps


def _at_infinity(x):
    # internal lam describes x' = 1/x; the public one describes X = lam*T^-e
    return RationalPuiseuxExpansion(
        center=None, lam=x.lam.inverse(), e=x.e, f=x.f, terms=x.terms, trunc=x.trunc,
        field=x.field, pole=x.pole, exact=x.exact, source_field=x.source_field, embed=x.embed)


# ---------------------------------------------------------------------------
# verification


def _local_model(F, exp):
    """The polynomial G over the expansion field with G(lam T^e, Y(T)) = 0."""
    src = exp.source_field if exp.source_field is not None else exp.field
    G = coerce_field(F, src)
    if exp.center is None:
        G = invert_x(G)
        lam = exp.lam.inverse()
    else:
        if exp.center:
            G = shift_x(G, exp.center)
        lam = exp.lam
    if exp.pole:
        G = invert_y(G)
    if exp.embed is not None and exp.field != src:
        G = G.map(exp.embed, exp.field)
    return G, lam


def _series(exp, lam, n):
    K = exp.field
    X = [K.zero] * n
    if exp.e < n:
        X[exp.e] = lam
    Y = [K.zero] * n
    for k, c in exp.terms:
        if k < n:
            Y[k] = c
    return X, Y


def verify_expansion(F: BiPoly, exp: RationalPuiseuxExpansion, K: int) -> bool:
    """True iff ``F(X(T), Y(T)) = 0 mod T^K``."""
    G, lam = _local_model(F, exp)
    X, Y = _series(exp, lam, K)
    return not any(_eval_xy(G, X, Y, K))


def max_determined_order(F: BiPoly, exp: RationalPuiseuxExpansion) -> int:
    """Largest K for which the residual modulo T^K is fixed by the known terms."""
    t = exp.trunc
    if exp.exact:
        return 2 * t
    G, lam = _local_model(F, exp)
    X, Y = _series(exp, lam, t)
    dy = _eval_xy(G.diff_y(), X, Y, t)
    w = next((i for i, c in enumerate(dy) if c), t)
    return t + min(w, t)
