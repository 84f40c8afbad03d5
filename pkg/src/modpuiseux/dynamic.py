"""Dynamic evaluation: arithmetic in K[z]/(h) for squarefree, possibly reducible h.

:class:`DynamicContext` behaves like a field.  Whenever a computation needs
to know whether an element is zero or invertible and the element turns out
to be a zero divisor, :class:`ZeroDivisorSplit` is raised carrying the
factorization ``h = h1 * h2`` that was discovered.  The caller that owns
the context restarts its computation in the two quotient rings.

Contexts stack: the base of a context can itself be a dynamic context, so a
split may surface from any level; callers compare ``split.ctx`` against the
context they own and re-raise otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroInversion
from . import fields as _fields
from .fields import Fraction, record_rational
from .upoly import UniPoly, xgcd


class ZeroDivisorSplit(Exception):
    """A zero divisor was met in ``ctx``; ``ctx.modulus == h1 * h2``."""

    def __init__(self, ctx, h1, h2):
        super().__init__(f"modulus splits: degrees {h1.degree} + {h2.degree}")
        self.ctx = ctx
        self.h1 = h1
        self.h2 = h2


@dataclass(frozen=True)
class Split:
    h1: UniPoly
    h2: UniPoly


class DynamicContext:
    """The ring ``base[z]/(modulus)`` treated as a field under dynamic evaluation."""

    is_field = True
    order = None

    def __init__(self, base, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        self.base = base
        self.modulus = modulus.monic()
        self.n = self.modulus.degree
        self.characteristic = base.characteristic
        self.level = getattr(base, "level", 0) + 1
        self.zero = DynElement(self, (base.zero,) * self.n)
        self.one = self.lift(base.one)
        self.gen = self._reduce([base.zero, base.one])

    def lift(self, c):
        """Embed a base element."""
        return DynElement(self, (c,) + (self.base.zero,) * (self.n - 1))

    def _reduce(self, coeffs):
        base, n = self.base, self.n
        m = self.modulus.coeffs
        c = list(coeffs)
        zero = base.zero
        for i in range(len(c) - 1, n - 1, -1):
            t = c[i]
            if t != zero:
                for j in range(n):
                    c[i - n + j] = c[i - n + j] - t * m[j]
        c = c[:n] + [base.zero] * (n - len(c))
        return DynElement(self, tuple(c))

    def __call__(self, value):
        if isinstance(value, DynElement) and value.ctx is self:
            return value
        return self.lift(self.base(value))

    def inv(self, a):
        return a.inverse()

    def exquo(self, a, b):
        return a * b.inverse()

    def key(self, a):
        return tuple(self.base.key(c) for c in a.rep)

    def __repr__(self):
        return f"{self.base!r}[z{self.level}]/({self.modulus.to_str(f'z{self.level}')})"


class DynElement:
    __slots__ = ("ctx", "rep", "_inv")

    def __init__(self, ctx, rep):
        self.ctx = ctx
        self.rep = rep
        self._inv = None
        if _fields._METERS and ctx.level == 1:
            for c in rep:
                record_rational(c)

    def _coerce(self, other):
        if isinstance(other, DynElement) and other.ctx is self.ctx:
            return other
        return self.ctx(other)

    def __add__(self, other):
        o = self._coerce(other)
        return DynElement(self.ctx, tuple(a + b for a, b in zip(self.rep, o.rep)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return DynElement(self.ctx, tuple(a - b for a, b in zip(self.rep, o.rep)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return DynElement(self.ctx, tuple(-a for a in self.rep))

    def __mul__(self, other):
        if isinstance(other, int):
            return DynElement(self.ctx, tuple(a * other for a in self.rep))
        o = self._coerce(other)
        ctx = self.ctx
        n = ctx.n
        zero = ctx.base.zero
        prod = [zero] * (2 * n - 1)
        for i, a in enumerate(self.rep):
            for j, b in enumerate(o.rep):
                prod[i + j] = prod[i + j] + a * b
        return ctx._reduce(prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _poly(self):
        return UniPoly(self.ctx.base, list(self.rep))

    def inverse(self):
        if self._inv is not None:
            return self._inv
        ctx = self.ctx
        a = self._poly()
        if a.is_zero():
            raise ZeroInversion("inverse of zero")
        g, s, _ = xgcd(a, ctx.modulus)
        if g.degree > 0:
            raise ZeroDivisorSplit(ctx, g, ctx.modulus.exquo(g).monic())
        inv = ctx._reduce(list(s.coeffs))
        self._inv = inv
        return inv

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __bool__(self):
        # zero test under dynamic evaluation: nonzero must mean invertible
        if not any(self.rep):
            return False
        self.inverse()
        return True

    def __eq__(self, other):
        if isinstance(other, DynElement):
            return self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == self.ctx(other).rep
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return f"[{', '.join(map(str, self.rep))}]"


def dyn_invert(a: DynElement, ctx: DynamicContext | None = None):
    """Inverse of ``a``, or :class:`Split` if ``a`` is a zero divisor of ``ctx``.

    Raises :class:`~modpuiseux.errors.ZeroInversion` when ``a`` is zero.
    """
    ctx = ctx or a.ctx
    try:
        return a.inverse()
    except ZeroDivisorSplit as s:
        if s.ctx is not ctx:
            raise
        return Split(s.h1, s.h2)
