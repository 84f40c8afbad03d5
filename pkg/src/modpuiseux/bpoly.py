"""Bivariate polynomials F(x, y) = sum_j a_j(x) y^j.

Stored y-major: ``coeffs[j]`` is the :class:`UniPoly` ``a_j`` in x.  The
Newton polygon reads valuations column by column, so this layout keeps the
hot loops local.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

from .errors import BadPrimeDenominator, NonExactDivision, ZeroPolynomial
from .fields import QQ, ZZ, FqContext, FqElement, prime_field
from .upoly import UniPoly, gcd_monic


def _format_coeff(c):
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(c) if isinstance(c, FqElement) else str(c)


def format_terms(terms, names):
    """Render ``[(exponents, coeff), ...]`` in the input grammar; highest terms first."""
    out = []
    for exps, c in sorted(terms, key=lambda t: tuple(reversed(t[0])), reverse=True):
        if not c:
            continue
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e
        )
        s = _format_coeff(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        if mono:
            s = mono if s == "1" else f"{s}*{mono}"
        out.append(("- " if neg else "+ ") + s)
    if not out:
        return "0"
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _convert(field, c):
    if isinstance(c, (int, Fraction)):
        return field(c)
    return c


class BiPoly:
    """Immutable bivariate polynomial over ``field``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = [a if isinstance(a, UniPoly) else UniPoly(field, a) for a in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.field = field
        self.coeffs = c

    @classmethod
    def from_dict(cls, field, terms):
        """Build from ``{(i, j): c}`` meaning ``c * x**i * y**j``."""
        if not terms:
            return cls(field, [])
        N = max(j for _, j in terms)
        cols = [dict() for _ in range(N + 1)]
        for (i, j), c in terms.items():
            cols[j][i] = cols[j].get(i, 0) + c
        polys = []
        for col in cols:
            deg = max(col) if col else -1
            polys.append(UniPoly(field, [_convert(field, col.get(i, 0)) for i in range(deg + 1)]))
        return cls(field, polys)

    @classmethod
    def parse(cls, text, field=QQ):
        from .parsing import parse_bipoly
        F = parse_bipoly(text)
        if field is QQ:
            return F
        return reduce_mod_p(F, field)

    # shape

    @property
    def deg_y(self):
        return len(self.coeffs) - 1

    @property
    def deg_x(self):
        return max((a.degree for a in self.coeffs), default=-1)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i, j):
        if j >= len(self.coeffs):
            return self.field.zero
        return self.coeffs[j][i]

    def terms(self):
        """Yield ``(i, j, c)`` for nonzero coefficients."""
        for j, a in enumerate(self.coeffs):
            for i, c in enumerate(a.coeffs):
                if c:
                    yield i, j, c

    def lc_y(self):
        return self.coeffs[-1] if self.coeffs else UniPoly.zero(self.field)

    def x_valuation(self, j):
        """x-adic valuation of ``a_j``; ``math.inf`` when ``a_j = 0``."""
        if j >= len(self.coeffs):
            return math.inf
        v = self.coeffs[j].valuation()
        return math.inf if v is None else v

    def y_content(self):
        """Largest k with y^k | F."""
        for j, a in enumerate(self.coeffs):
            if a:
                return j
        raise ZeroPolynomial("y-content of zero")

    def div_y(self, k=1):
        if any(a for a in self.coeffs[:k]):
            raise NonExactDivision("not divisible by y^%d" % k)
        return BiPoly(self.field, self.coeffs[k:])

    def x_content(self):
        """Largest k with x^k | F."""
        return min(v for v in (a.valuation() for a in self.coeffs) if v is not None)

    def at_x0(self):
        """F(0, y) as a univariate polynomial in y."""
        return UniPoly(self.field, [a[0] for a in self.coeffs])

    # arithmetic

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return BiPoly(self.field, out)

    def __neg__(self):
        return BiPoly(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly(self.field, [a * other for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return BiPoly(self.field, [])
        out = [UniPoly.zero(self.field)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return BiPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        acc = BiPoly(self.field, [UniPoly.one(self.field)])
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(tuple(a.coeffs) for a in self.coeffs))

    def diff_y(self):
        return BiPoly(self.field, [a * j for j, a in enumerate(self.coeffs)][1:])

    def diff_x(self):
        return BiPoly(self.field, [a.derivative() for a in self.coeffs])

    def __call__(self, x, y):
        """Evaluate at a point of the coefficient field (or any compatible ring)."""
        acc = self.field.zero
        for a in reversed(self.coeffs):
            acc = acc * y + a(x)
        return acc

    def map(self, fn, field):
        return BiPoly(field, [a.map(fn, field) for a in self.coeffs])

    def to_str(self):
        return format_terms([((i, j), c) for i, j, c in self.terms()], ("x", "y"))

    __str__ = to_str

    def __repr__(self):
        return f"BiPoly({self.to_str()} over {self.field!r})"


# ---------------------------------------------------------------------------
# field changes


def coerce_field(F: BiPoly, K, embed=None) -> BiPoly:
    """Map ``F`` into ``K``.  Without ``embed``, prime-field and integer
    coefficients are converted through ``int``."""
    if F.field is K or F.field == K:
        return F
    if embed is None:
        src = F.field
        if isinstance(src, FqContext) and src.k == 1:
            def embed(c):
                return K(c.rep[0])
        else:
            embed = K
    return F.map(embed, K)


def reduce_mod_p(F: BiPoly, p) -> BiPoly:
    """Coefficient-wise reduction ``num * den^-1 mod p`` of a polynomial over Q."""
    K = p if isinstance(p, FqContext) else prime_field(int(p))
    P = K.p

    def red(c):
        c = Fraction(c)
        if c.denominator % P == 0:
            raise BadPrimeDenominator(f"{P} divides the denominator of {c}")
        return K(c.numerator * pow(c.denominator, -1, P))
    return F.map(red, K)


# ---------------------------------------------------------------------------
# substitutions


def shift_x(F: BiPoly, x0) -> BiPoly:
    """``F(x + x0, y)`` (coefficients moved into the field of ``x0`` when needed)."""
    if isinstance(x0, FqElement) and F.field != x0.ctx:
        F = coerce_field(F, x0.ctx)
    return BiPoly(F.field, [a.shift(x0) for a in F.coeffs])


def invert_x(F: BiPoly) -> BiPoly:
    """``x^deg_x(F) * F(1/x, y)``."""
    D = F.deg_x
    return BiPoly(F.field, [a.reverse(D) for a in F.coeffs])


def invert_y(F: BiPoly) -> BiPoly:
    """``y^deg_y(F) * F(x, 1/y)``."""
    return BiPoly(F.field, list(reversed(F.coeffs)))


def bezout_pair(q: int, m: int):
    """The pair ``(u, v)`` with ``u*q - v*m = 1`` and ``0 <= v < q``."""
    if q < 1 or m < 0 or gcd(q, m) != 1:
        raise ValueError(f"invalid edge data q={q}, m={m}")
    if q == 1:
        return 1, 0
    v = (-pow(m, -1, q)) % q
    u = (1 + v * m) // q
    return u, v


def edge_transform(F: BiPoly, edge, xi, u, v, trunc_x=None) -> BiPoly:
    """``F(xi^v x^q, x^m (xi^u + y)) / x^l``.

    ``edge`` supplies ``q, m, l``.  With ``trunc_x`` the result is reduced
    modulo ``x^trunc_x`` (benchmark mode).  Raises :class:`NonExactDivision`
    if ``x^l`` does not divide the substituted polynomial.
    """
    q, m, l = edge.q, edge.m, edge.l
    if q < 1 or m < 0 or gcd(q, m) != 1:
        raise ValueError(f"invalid edge data q={q}, m={m}")
    if u * q - v * m != 1:
        raise ValueError("(u, v) is not a Bezout pair for (q, m)")
    if not xi:
        raise ValueError("xi must be nonzero")
    K = F.field
    zero = K.zero
    xv = xi ** v
    deg_x = F.deg_x
    pw = [K.one]
    for _ in range(deg_x):
        pw.append(pw[-1] * xv)
    cols = []
    for j, a in enumerate(F.coeffs):
        col = {}
        for i, c in enumerate(a.coeffs):
            if c:
                e = q * i + m * j - l
                if e < 0:
                    raise NonExactDivision(f"x^{l} does not divide the term x^{i} y^{j} after substitution")
                if trunc_x is None or e < trunc_x:
                    col[e] = c * pw[i]
        if col:
            top = max(col)
            cols.append(UniPoly(K, [col.get(t, zero) for t in range(top + 1)]))
        else:
            cols.append(UniPoly.zero(K))
    w = xi ** u
    # Horner in (w + y)
    acc = [cols[-1]] if cols else []
    for c in reversed(cols[:-1]):
        new = [a * w for a in acc] + [UniPoly.zero(K)]
        for t in range(len(acc)):
            new[t + 1] = new[t + 1] + acc[t]
        new[0] = new[0] + c
        acc = new
    return BiPoly(K, acc)


# ---------------------------------------------------------------------------
# resultants


def _lc(a):
    return a[-1]


def _prem(A, B):
    """Pseudo-remainder of coefficient lists over an integral domain."""
    dB = len(B) - 1
    R = list(A)
    steps = len(R) - dB
    lb = B[-1]
    done = 0
    while R and len(R) - 1 >= dB:
        c = R[-1]
        R = [x * lb for x in R[:-1]]
        off = len(R) - dB
        for j in range(dB):
            R[off + j] = R[off + j] - c * B[j]
        while R and not R[-1]:
            R.pop()
        done += 1
    if R and done < steps:
        s = lb ** (steps - done)
        R = [x * s for x in R]
    return R


def resultant_y(A: list, B: list):
    """Resultant of two polynomials in y given as coefficient lists over a
    domain (UniPoly elements), by the subresultant PRS."""
    if not A or not B:
        return UniPoly.zero(A[0].field if A else B[0].field)
    D = A[0].field
    one = UniPoly.one(D)
    dA, dB = len(A) - 1, len(B) - 1
    s = 1
    if dA < dB:
        A, B, dA, dB = B, A, dB, dA
        if dA % 2 and dB % 2:
            s = -s
    if dB == 0:
        return B[0] ** dA * s
    g = h = one
    while True:
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B)
        A = B
        if not R:
            return UniPoly.zero(D)
        div = g * h ** delta
        B = [c.exquo(div) for c in R]
        g = _lc(A)
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g ** delta).exquo(h ** (delta - 1))
        dA, dB = len(A) - 1, len(B) - 1
        if dB == 0:
            res = (B[0] ** dA).exquo(h ** (dA - 1))
            return res * s


def _integer_model(F: BiPoly):
    """Return ``(G, D)`` with ``G = D*F`` over ZZ[x][y]."""
    den = 1
    for _, _, c in F.terms():
        den = den * c.denominator // gcd(den, c.denominator)
    G = [UniPoly(ZZ, [int(c * den) for c in a.coeffs]) for a in F.coeffs]
    return G, den


def integer_discriminant(F: BiPoly) -> UniPoly:
    """Discriminant over ZZ of the integer model ``D*F`` of a polynomial over Q."""
    G, _ = _integer_model(F)
    return _disc_from_lists(G)


def _disc_from_lists(C):
    N = len(C) - 1
    dC = [c * j for j, c in enumerate(C)][1:]
    while dC and not dC[-1]:
        dC.pop()
    K = C[0].field
    if not dC:
        return UniPoly.zero(K)
    res = resultant_y(C, dC)
    d = res.exquo(C[-1])
    if (N * (N - 1) // 2) % 2:
        d = -d
    return d


def discriminant_y(F: BiPoly) -> UniPoly:
    """Discriminant of F with respect to y, a polynomial in x.

    Over Q the computation runs on the integer model and is rescaled at the
    end, so no rational arithmetic enters the PRS.
    """
    if F.deg_y < 1:
        raise ValueError("discriminant needs deg_y >= 1")
    if F.field is QQ:
        G, den = _integer_model(F)
        d = _disc_from_lists(G)
        N = F.deg_y
        scale = Fraction(1, den ** (2 * N - 2))
        return UniPoly(QQ, [Fraction(c) * scale for c in d.coeffs])
    return _disc_from_lists(list(F.coeffs))


def is_squarefree_y(F: BiPoly, tries: int = 8) -> bool:
    """Whether ``disc_y(F)`` is nonzero.

    A point x0 with ``lc_y(F)(x0) != 0`` and ``gcd(F(x0, y), F_y(x0, y)) = 1``
    certifies a nonzero discriminant; only when ``tries`` such points all
    fail is the discriminant computed in full.
    """
    if F.deg_y < 1:
        return True
    K = F.field
    lc = F.lc_y()
    Fy = F.diff_y()
    limit = tries if K.order is None else min(tries, K.order)
    for t in range(limit):
        x0 = K(t)
        if not lc(x0):
            continue
        f = UniPoly(K, [a(x0) for a in F.coeffs])
        g = UniPoly(K, [a(x0) for a in Fy.coeffs])
        if g and gcd_monic(f, g).degree == 0:
            return True
    return not discriminant_y(F).is_zero()
