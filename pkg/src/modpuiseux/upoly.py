"""Dense univariate polynomials over an abstract coefficient domain.

A :class:`UniPoly` stores ``coeffs[i]`` = coefficient of ``x**i`` as field
elements of ``field`` (``QQ``, ``ZZ``, an :class:`~modpuiseux.fields.FqContext`
or a dynamic-evaluation ring).  The zero polynomial has no coefficients.

Over finite fields the module provides squarefree decomposition, distinct-
and equal-degree factorization (Cantor-Zassenhaus) and root finding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import fields as _fields
from .errors import DivisionByZeroPoly, NonExactDivision, SplittingFailure, ZeroPolynomial


def _meter(coeffs):
    for x in coeffs:
        _fields.record_rational(x)


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = [field(x) if isinstance(x, int) else x for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.coeffs = c
        if _fields._METERS and field is _fields.QQ:
            _meter(c)

    @classmethod
    def _raw(cls, field, coeffs):
        # coeffs are already trimmed field elements
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = coeffs
        if _fields._METERS and field is _fields.QQ:
            _meter(coeffs)
        return p

    @classmethod
    def zero(cls, field):
        return cls._raw(field, [])

    @classmethod
    def one(cls, field):
        return cls._raw(field, [field.one])

    @classmethod
    def x(cls, field):
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def monomial(cls, field, c, n):
        return cls(field, [field.zero] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def __getitem__(self, i):
        c = self.coeffs
        return c[i] if 0 <= i < len(c) else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def valuation(self):
        """Index of the lowest nonzero coefficient, ``None`` for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # ring operations

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly(self.field, [other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if not other:
                return UniPoly.zero(self.field)
            return UniPoly(self.field, [c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        if not other.coeffs:
            raise DivisionByZeroPoly("division by the zero polynomial")
        K = self.field
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv = K.inv(b[-1])
        if len(r) <= db:
            return UniPoly.zero(K), UniPoly(K, r)
        q = [K.zero] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                c = c * inv
                q[i - db] = c
                for j in range(db):
                    r[i - db + j] = r[i - db + j] - c * b[j]
            r[i] = K.zero
        return UniPoly(K, q), UniPoly(K, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """Exact quotient; works over rings such as ZZ.  Raises NonExactDivision."""
        if not other.coeffs:
            raise DivisionByZeroPoly("division by the zero polynomial")
        K = self.field
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) <= db:
            if r:
                raise NonExactDivision("nonzero remainder")
            return UniPoly.zero(K)
        q = [K.zero] * (len(r) - db)
        lb = b[-1]
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                c = K.exquo(c, lb)
                q[i - db] = c
                for j in range(db):
                    r[i - db + j] = r[i - db + j] - c * b[j]
        if any(r[:db]):
            raise NonExactDivision("nonzero remainder")
        return UniPoly(K, q)

    def prem(self, other):
        """Pseudo-remainder of ``lc(other)**(deg self - deg other + 1) * self`` by ``other``."""
        K = self.field
        b = other.coeffs
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) <= db:
            return UniPoly(K, r)
        steps = len(r) - db
        lb = b[-1]
        done = 0
        while len(r) - 1 >= db:
            c = r[-1]
            r = [x * lb for x in r[:-1]]
            off = len(r) - db
            for j in range(db):
                r[off + j] = r[off + j] - c * b[j]
            while r and not r[-1]:
                r.pop()
            done += 1
        if done < steps:
            s = lb ** (steps - done)
            r = [x * s for x in r]
        return UniPoly(K, r)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def key(self):
        return tuple(self.field.key(c) for c in self.coeffs)

    # calculus and evaluation

    def derivative(self):
        return UniPoly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, a):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    eval = __call__

    def compose(self, g):
        acc = UniPoly.zero(g.field)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def shift(self, a):
        """``self(x + a)``."""
        return self.compose(UniPoly(self.field, [a, self.field.one]))

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == self.field.one:
            return self
        inv = self.field.inv(lc)
        return UniPoly._raw(self.field, [c * inv for c in self.coeffs[:-1]] + [self.field.one])

    def map(self, fn, field):
        """Coefficient-wise image under ``fn`` into ``field``."""
        return UniPoly(field, [fn(c) for c in self.coeffs])

    def reverse(self, n=None):
        n = self.degree if n is None else n
        c = list(self.coeffs) + [self.field.zero] * (n + 1 - len(self.coeffs))
        return UniPoly(self.field, c[::-1])

    def powmod(self, e, mod):
        result = UniPoly.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            e >>= 1
            if e:
                base = base * base % mod
        return result

    def to_str(self, var="x"):
        from .bpoly import format_terms
        return format_terms([((i,), c) for i, c in enumerate(self.coeffs)], (var,))

    def __repr__(self):
        return f"UniPoly({self.to_str()} over {self.field})"


# ---------------------------------------------------------------------------
# gcd and squarefree decomposition


def gcd_monic(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a field."""
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: UniPoly, b: UniPoly):
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` monic."""
    K = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly.one(K), UniPoly.zero(K)
    t0, t1 = UniPoly.zero(K), UniPoly.one(K)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = K.inv(r0.lc)
    return r0 * inv, s0 * inv, t0 * inv


@dataclass
class SquarefreeDecomposition:
    """``unit * prod(g**mult for g, mult in parts)``, parts monic squarefree, pairwise coprime."""

    parts: list
    unit: object

    def profile(self):
        return tuple(sorted((g.degree, m) for g, m in self.parts))

    def expand(self):
        acc = None
        for g, m in self.parts:
            acc = g ** m if acc is None else acc * g ** m
        if acc is None:
            return None
        return acc * self.unit


def _yun(f):
    K = f.field
    out = []
    fp = f.derivative()
    a = gcd_monic(f, fp) if fp else f
    b = f.exquo(a)
    c = fp.exquo(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = gcd_monic(b, d) if (b or d) else UniPoly.one(K)
        if g.degree > 0:
            out.append((g, i))
        b = b.exquo(g)
        c = d.exquo(g)
        d = c - b.derivative()
        i += 1
    return out


def _pth_root_poly(f):
    K = f.field
    p = K.characteristic
    return UniPoly(K, [K.pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)])


def _musser(f):
    K = f.field
    p = K.characteristic
    result = {}
    fp = f.derivative()
    if fp.is_zero():
        for g, m in _musser(_pth_root_poly(f)):
            result[m * p] = result.get(m * p, UniPoly.one(K)) * g
        return sorted([(g, m) for m, g in result.items()], key=lambda t: t[1])
    c = gcd_monic(f, fp)
    w = f.exquo(c)
    i = 1
    while w.degree > 0:
        y = gcd_monic(w, c)
        z = w.exquo(y)
        if z.degree > 0:
            result[i] = result.get(i, UniPoly.one(K)) * z
        i += 1
        w = y
        c = c.exquo(y)
    if c.degree > 0:
        for g, m in _musser(_pth_root_poly(c)):
            result[m * p] = result.get(m * p, UniPoly.one(K)) * g
    return sorted([(g, m) for m, g in result.items()], key=lambda t: t[1])


def squarefree_decomposition(f: UniPoly) -> SquarefreeDecomposition:
    """Squarefree decomposition: Yun in characteristic 0 (or ``p > deg f``),
    Musser with p-th root descent otherwise."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    unit = f.lc
    g = f.monic()
    if g.degree == 0:
        return SquarefreeDecomposition([], unit)
    if g.degree == 1:
        return SquarefreeDecomposition([(g, 1)], unit)
    p = f.field.characteristic
    parts = _yun(g) if p == 0 or p > g.degree else _musser(g)
    return SquarefreeDecomposition(parts, unit)


def is_squarefree(f: UniPoly) -> bool:
    return all(m == 1 for _, m in squarefree_decomposition(f).parts)


# ---------------------------------------------------------------------------
# finite field factorization


@dataclass
class FactorList:
    """``unit * prod(g**mult)`` with ``g`` monic irreducible."""

    factors: list
    unit: object = None

    def expand(self, field):
        acc = UniPoly(field, [self.unit])
        for g, m in self.factors:
            acc = acc * g ** m
        return acc


def _x(K):
    return UniPoly.x(K)


def distinct_degree(f: UniPoly):
    """Distinct-degree factorization of a monic squarefree ``f``: list of ``(g, d)``."""
    K = f.field
    q = K.order
    out = []
    h = _x(K)
    x = _x(K)
    rest = f
    i = 1
    while 2 * i <= rest.degree:
        h = h.powmod(q, rest)
        g = gcd_monic(h - x, rest)
        if g.degree > 0:
            out.append((g, i))
            rest = rest.exquo(g)
            h = h % rest
        i += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _random_poly(K, n, rng):
    return UniPoly(K, [K.random(rng) for _ in range(n)])


def equal_degree(f: UniPoly, d: int, rng):
    """Split a monic squarefree ``f`` whose irreducible factors all have degree ``d``."""
    n = f.degree
    if n == d:
        return [f]
    K = f.field
    q = K.order
    budget = 64 * n
    for _ in range(budget):
        a = _random_poly(K, n, rng)
        if a.degree < 1:
            continue
        if K.characteristic == 2:
            # trace map to F_2: a + a^2 + ... + a^(2^(k d - 1))
            t = a % f
            acc = t
            for _ in range(K.degree * d - 1):
                t = t * t % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((q ** d - 1) // 2, f) - UniPoly.one(K)
        g = gcd_monic(b, f) if b else f
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f.exquo(g), d, rng)
    raise SplittingFailure(f"equal-degree splitting failed after {budget} attempts")


def _sort_key(g):
    return (g.degree, g.key())


def factor_fq(f: UniPoly, rng=None) -> FactorList:
    """Complete factorization into monic irreducibles over a finite field.

    Factors are returned sorted by (degree, coefficients), so the output is
    independent of ``rng``.
    """
    if f.is_zero():
        raise ZeroPolynomial("factorization of zero")
    if f.degree == 1:
        return FactorList([(f.monic(), 1)], f.lc)
    if rng is None:
        rng = random.Random(0)
    out = []
    sqf = squarefree_decomposition(f)
    for g, m in sqf.parts:
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (_sort_key(t[0]), t[1]))
    return FactorList(out, sqf.unit)


def roots_in_field(f: UniPoly, rng=None):
    """Roots of ``f`` lying in its coefficient field, as ``(root, multiplicity)`` pairs."""
    if f.is_zero():
        raise ZeroPolynomial("roots of zero")
    if rng is None:
        rng = random.Random(0)
    K = f.field
    out = []
    for g, m in squarefree_decomposition(f).parts:
        lin = gcd_monic(_x(K).powmod(K.order, g) - _x(K), g)
        if lin.degree > 0:
            for h in equal_degree(lin, 1, rng):
                out.append((-h.coeffs[0], m))
    out.sort(key=lambda t: K.key(t[0]))
    return out


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: UniPoly) -> bool:
    """Rabin's irreducibility test over a finite field."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    K = f.field
    q = K.order
    f = f.monic()
    x = _x(K)
    for r in _prime_divisors(n):
        h = x
        for _ in range(n // r):
            h = h.powmod(q, f)
        if gcd_monic(h - x, f).degree > 0:
            return False
    h = x
    for _ in range(n):
        h = h.powmod(q, f)
    return (h - x) % f == UniPoly.zero(K)


def find_irreducible(K, n, seed=0):
    """A monic irreducible polynomial of degree ``n`` over ``K`` chosen by seeded search."""
    rng = random.Random(f"{K!r}:{n}:{seed}")
    while True:
        f = UniPoly(K, [K.random(rng) for _ in range(n)] + [K.one])
        if is_irreducible(f):
            return f
