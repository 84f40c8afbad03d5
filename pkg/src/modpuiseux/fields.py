"""Coefficient domains: integers, rationals, prime fields and F_p[z]/(m).

Integers and rationals are Python's ``int`` and :class:`fractions.Fraction`.
Finite fields are :class:`FqContext` objects; their elements are
:class:`FqElement` values holding a canonical residue ``rep`` (a tuple of
``k`` integers in ``[0, p)``, lowest degree first).

Every field object exposes the small protocol used by the polynomial code:
``zero``, ``one``, ``__call__(int)``, ``inv``, ``exquo``, ``characteristic``
and ``order`` (``None`` for infinite fields).
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

from .errors import ContextMismatch, PrimeSearchExhausted, ReducibleModulus, ZeroInversion

__all__ = [
    "ZZ", "QQ", "FqContext", "FqElement", "fq_make", "prime_field",
    "is_prime", "random_prime", "next_prime", "bit_meter",
]


# ---------------------------------------------------------------------------
# coefficient size metering

_METERS: list = []


class BitMeter:
    """Records the largest coefficient bit-size seen while active."""

    def __init__(self):
        self.peak = 0

    def record(self, bits):
        if bits > self.peak:
            self.peak = bits


@contextmanager
def bit_meter():
    """Context manager yielding a :class:`BitMeter` fed by field arithmetic.

    Rationals report ``max(bitlen(num), bitlen(den))``; finite field residues
    report the bit length of their integer representatives.
    """
    meter = BitMeter()
    _METERS.append(meter)
    try:
        yield meter
    finally:
        _METERS.remove(meter)


def _record(bits):
    for m in _METERS:
        m.record(bits)


def record_rational(c):
    if _METERS:
        if isinstance(c, Fraction):
            _record(max(c.numerator.bit_length(), c.denominator.bit_length()))
        elif isinstance(c, int):
            _record(c.bit_length())


# ---------------------------------------------------------------------------
# primes

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_ROUNDS = 40


def _mr_witness(a, d, s, n):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for ``n < 2**64`` (first twelve prime bases); beyond that
    40 further rounds with bases drawn from a generator seeded by ``n``.
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        if _mr_witness(a, d, s, n):
            return False
    if n < 1 << 64:
        return True
    rng = random.Random(n)
    for _ in range(MR_ROUNDS):
        if _mr_witness(rng.randrange(2, n - 1), d, s, n):
            return False
    return True


def random_prime(bits: int, rng: random.Random) -> int:
    """Uniformly sampled prime ``p`` with ``2**(bits-1) <= p < 2**bits``."""
    if bits < 3:
        raise ValueError("bits must be at least 3")
    lo = 1 << (bits - 1)
    for _ in range(100 * bits):
        n = lo | rng.getrandbits(bits - 1)
        if is_prime(n):
            return n
    raise PrimeSearchExhausted(f"no prime found among {100 * bits} candidates of {bits} bits")


def next_prime(n: int) -> int:
    """Smallest prime ``>= n``."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


# ---------------------------------------------------------------------------
# integers and rationals


class IntegerRing:
    """The ring Z with elements ``int``.  Not a field: ``exquo`` is exact division."""

    zero = 0
    one = 1
    characteristic = 0
    order = None
    is_field = False

    def __call__(self, n):
        return int(n)

    def exquo(self, a, b):
        q, r = divmod(a, b)
        if r:
            from .errors import NonExactDivision
            raise NonExactDivision(f"{a} is not divisible by {b}")
        return q

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ZeroInversion(f"{a} is not a unit in Z")

    def key(self, a):
        return (a,)

    def __repr__(self):
        return "ZZ"


class RationalField:
    """The field Q with elements :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0
    order = None
    is_field = True
    degree = 1

    def __call__(self, n):
        return Fraction(n)

    def inv(self, a):
        if not a:
            raise ZeroInversion("inverse of zero")
        r = 1 / a
        record_rational(r)
        return r

    def exquo(self, a, b):
        return a * self.inv(b)

    def key(self, a):
        return (a.numerator, a.denominator)

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


# ---------------------------------------------------------------------------
# finite fields

# raw dense polynomials over F_p as int lists, lowest degree first


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _raw_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _raw_xgcd_inverse(a, m, p):
    """Inverse of ``a`` modulo ``m`` over F_p, or None if not coprime."""
    r0, r1 = list(m), _trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = _raw_divmod(r0, r1, p)
        # s0 - q*s1
        prod = [0] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            for j, sj in enumerate(s1):
                prod[i + j] = (prod[i + j] + qi * sj) % p
        n = max(len(s0), len(prod))
        s2 = [((s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)) % p for i in range(n)]
        r0, r1 = r1, r
        s0, s1 = s1, _trim(s2)
    if len(r0) != 1:
        return None
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


class FqContext:
    """The finite field F_p[z]/(m(z)), ``m`` monic of degree ``k``.

    Build instances with :func:`fq_make` (which verifies irreducibility) or
    :func:`prime_field`.  Two contexts with the same ``p`` and modulus compare
    equal and their elements interoperate.
    """

    is_field = True

    def __init__(self, p, modulus):
        self.p = p
        self.modulus = tuple(modulus)
        self.k = len(self.modulus) - 1
        self.degree = self.k
        self.characteristic = p
        self.order = p ** self.k
        self._hash = hash((p, self.modulus))
        self.zero = FqElement(self, (0,) * self.k)
        self.one = FqElement(self, (1,) + (0,) * (self.k - 1))
        self.gen = self._from_raw([0, 1])

    # construction helpers

    def _from_raw(self, coeffs):
        """Element from an arbitrary int list (reduced mod m)."""
        p, k = self.p, self.k
        c = [x % p for x in coeffs]
        if len(c) > k:
            _, c = _raw_divmod(c, self.modulus, p)
        c = list(c) + [0] * (k - len(c))
        return FqElement(self, tuple(c))

    def __call__(self, value):
        if isinstance(value, FqElement):
            if value.ctx != self:
                raise ContextMismatch("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return self._from_raw(list(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroInversion("denominator divisible by the characteristic")
            return self(value.numerator) * self.inv(self(value.denominator))
        return FqElement(self, (int(value) % self.p,) + (0,) * (self.k - 1))

    def inv(self, a):
        return a.inverse()

    def exquo(self, a, b):
        return a * b.inverse()

    def key(self, a):
        return a.rep

    def random(self, rng):
        return FqElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def elements(self):
        """Iterate over all ``p**k`` elements (small fields only)."""
        import itertools
        for rep in itertools.product(range(self.p), repeat=self.k):
            yield FqElement(self, tuple(reversed(rep)))

    def pth_root(self, a):
        """Inverse Frobenius."""
        if self.k == 1:
            return a
        return a ** (self.p ** (self.k - 1))

    def modulus_poly(self):
        from .upoly import UniPoly
        return UniPoly(prime_field(self.p), list(self.modulus))

    def __eq__(self, other):
        return self is other or (isinstance(other, FqContext) and self.p == other.p
                                 and self.modulus == other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"


class FqElement:
    """Element of an :class:`FqContext`; immutable."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx, rep):
        self.ctx = ctx
        self.rep = rep
        if _METERS:
            _record(max(x.bit_length() for x in rep))

    def _coerce(self, other):
        if isinstance(other, FqElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FqElement(self.ctx, tuple((a + b) % p for a, b in zip(self.rep, other.rep)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FqElement(self.ctx, tuple((a - b) % p for a, b in zip(self.rep, other.rep)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.ctx.p
        return FqElement(self.ctx, tuple(-a % p for a in self.rep))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.ctx.p
            return FqElement(self.ctx, tuple(a * other % p for a in self.rep))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        p, k = ctx.p, ctx.k
        if k == 1:
            return FqElement(ctx, (self.rep[0] * other.rep[0] % p,))
        a, b = self.rep, other.rep
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        m = ctx.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return FqElement(ctx, tuple(x % p for x in prod[:k]))

    __rmul__ = __mul__

    def inverse(self):
        ctx = self.ctx
        if not any(self.rep):
            raise ZeroInversion(f"inverse of zero in {ctx}")
        if ctx.k == 1:
            return FqElement(ctx, (pow(self.rep[0], -1, ctx.p),))
        inv = _raw_xgcd_inverse(self.rep, ctx.modulus, ctx.p)
        if inv is None:
            raise ReducibleModulus("modulus is not irreducible")
        return ctx._from_raw(inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        ctx = self.ctx
        if ctx.k == 1:
            return FqElement(ctx, (pow(self.rep[0], n, ctx.p),))
        result, base = ctx.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return any(self.rep)

    def __eq__(self, other):
        if isinstance(other, FqElement):
            return self.rep == other.rep and (self.ctx is other.ctx or self.ctx == other.ctx)
        if isinstance(other, int):
            return self.rep == self.ctx(other).rep
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __int__(self):
        if any(self.rep[1:]):
            raise ValueError("element is not in the prime field")
        return self.rep[0]

    def __repr__(self):
        if self.ctx.k == 1:
            return str(self.rep[0])
        terms = []
        for i, c in enumerate(self.rep):
            if c:
                mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return "(" + " + ".join(reversed(terms)) + ")" if terms else "0"


@lru_cache(maxsize=None)
def _cached_context(p, modulus):
    return FqContext(p, modulus)


@lru_cache(maxsize=None)
def prime_field(p: int) -> FqContext:
    """F_p, represented as F_p[z]/(z)."""
    return fq_make(p, (0, 1))


def fq_make(p, m, check=True) -> FqContext:
    """Context for F_p[z]/(m).

    ``m`` is a monic polynomial over F_p given as a coefficient sequence
    (lowest degree first) or a :class:`~modpuiseux.upoly.UniPoly`.  With
    ``check`` set, primality of ``p`` and irreducibility of ``m`` are
    verified; :class:`ReducibleModulus` is raised if ``m`` splits.
    """
    if hasattr(m, "coeffs"):
        m = [int(c) for c in m.coeffs]
    m = tuple(int(c) % p for c in m)
    while m and m[-1] == 0:
        m = m[:-1]
    if len(m) < 2:
        raise ValueError("modulus must have degree at least 1")
    if m[-1] != 1:
        raise ValueError("modulus must be monic")
    if len(m) == 2 or not check:
        if check and not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return _cached_context(p, m)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    from .upoly import UniPoly, is_irreducible
    if not is_irreducible(UniPoly(_cached_context(p, (0, 1)), list(m))):
        raise ReducibleModulus(f"modulus {m} is reducible over GF({p})")
    return _cached_context(p, m)
