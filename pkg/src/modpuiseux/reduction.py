"""Choosing primes of good reduction.

A prime is *screened* by cheap arithmetic tests and *verified* by comparing
the polygon tree of ``F mod p`` with the tree of F over Q.  Three drivers
sit on top: Monte-Carlo (random screened prime), Las-Vegas (random verified
prime) and a deterministic upward enumeration.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .bpoly import BiPoly, integer_discriminant, reduce_mod_p
from .errors import RetryBudgetExhausted
from .fields import next_prime, random_prime
from .polygon import polygon_tree, tree_equal

__all__ = ["Status", "Reason", "PrimeVerdict", "screen_prime", "verify_prime", "choose_prime",
           "Strategy", "MIN_RETRIES"]

MIN_RETRIES = 64


class Status(enum.Enum):
    GoodVerified = "GoodVerified"
    GoodScreened = "GoodScreened"
    Bad = "Bad"


class Reason(enum.Enum):
    DividesLeadingCoeff = "DividesLeadingCoeff"
    DropsYDegree = "DropsYDegree"
    DenominatorClash = "DenominatorClash"
    NotSquarefreeModP = "NotSquarefreeModP"
    TreeMismatch = "TreeMismatch"
    SmallCharacteristic = "SmallCharacteristic"


class Strategy(enum.Enum):
    MonteCarlo = "mc"
    LasVegas = "lv"
    Deterministic = "det"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        aliases = {"mc": cls.MonteCarlo, "montecarlo": cls.MonteCarlo,
                   "lv": cls.LasVegas, "lasvegas": cls.LasVegas,
                   "det": cls.Deterministic, "deterministic": cls.Deterministic}
        try:
            return aliases[str(s).lower()]
        except KeyError:
            raise ValueError(f"unknown strategy {s!r}") from None


@dataclass(frozen=True)
class PrimeVerdict:
    p: int
    status: Status
    reason: Optional[Reason] = None

    def __post_init__(self):
        if (self.status is Status.Bad) != (self.reason is not None):
            raise ValueError("a Bad verdict carries exactly one reason, others none")

    @property
    def good(self):
        return self.status is not Status.Bad

    def as_dict(self):
        d = {"p": self.p, "status": self.status.value}
        if self.reason is not None:
            d["reason"] = self.reason.value
        return d


@lru_cache(maxsize=256)
def _disc(F):
    return integer_discriminant(F)


@lru_cache(maxsize=256)
def _q_tree(F):
    return polygon_tree(F)


def screen_prime(F: BiPoly, p: int) -> PrimeVerdict:
    """Cheap tests: characteristic, denominators, degrees and the discriminant mod p.

    ``DividesLeadingCoeff`` flags primes dividing the leading x-coefficient of
    the y-leading coefficient or of the discriminant, since either moves a
    critical center to infinity.
    """

    def bad(r):
        return PrimeVerdict(p, Status.Bad, r)

    N = F.deg_y
    if p <= N:
        return bad(Reason.SmallCharacteristic)
    if any(c.denominator % p == 0 for _, _, c in F.terms()):
        return bad(Reason.DenominatorClash)
    Fp = reduce_mod_p(F, p)
    if Fp.deg_y != N:
        return bad(Reason.DropsYDegree)
    if Fp.lc_y().degree != F.lc_y().degree:
        return bad(Reason.DividesLeadingCoeff)
    if N >= 1:
        D = _disc(F)
        Dp = [c % p for c in D.coeffs]
        if not any(Dp):
            return bad(Reason.NotSquarefreeModP)
        if Dp[-1] == 0:
            return bad(Reason.DividesLeadingCoeff)
    return PrimeVerdict(p, Status.GoodScreened)


def verify_prime(F: BiPoly, p: int, allow_small_char: bool = False) -> PrimeVerdict:
    """Compare polygon trees over Q and over F_p.

    Runs the screen first; ``allow_small_char`` lifts only the ``p > degY``
    guard so that tree comparison can be exercised at tiny primes.
    """
    v = screen_prime(F, p)
    if v.status is Status.Bad and not (allow_small_char and v.reason is Reason.SmallCharacteristic):
        return v
    if allow_small_char and any(c.denominator % p == 0 for _, _, c in F.terms()):
        return PrimeVerdict(p, Status.Bad, Reason.DenominatorClash)
    tq = _q_tree(F)
    tp = polygon_tree(reduce_mod_p(F, p), check=False)
    if tree_equal(tq, tp):
        return PrimeVerdict(p, Status.GoodVerified)
    return PrimeVerdict(p, Status.Bad, Reason.TreeMismatch)


def choose_prime(F: BiPoly, strategy="mc", lambda_: int = 62, rng=None,
                 retries: int = MIN_RETRIES) -> PrimeVerdict:
    """Select a prime according to ``strategy``.

    Monte-Carlo and Las-Vegas draw ``lambda_``-bit primes and give up after
    ``retries`` rejections; the deterministic strategy scans primes upward
    from ``2^(lambda_ - 1)``.
    """
    strategy = Strategy.parse(strategy)
    # the deterministic scan is also meaningful for tiny lambda
    if lambda_ < (2 if strategy is Strategy.Deterministic else 8):
        raise ValueError(f"lambda = {lambda_} is too small for {strategy.name}")
    rng = rng if rng is not None else random.Random()
    retries = max(retries, MIN_RETRIES)
    rejected = []

    if strategy is Strategy.Deterministic:
        p = next_prime(1 << (lambda_ - 1))
        for _ in range(retries * 64):
            v = screen_prime(F, p)
            if v.good:
                v = verify_prime(F, p)
                if v.good:
                    return v
            rejected.append(v)
            p = next_prime(p + 1)
        raise RetryBudgetExhausted(_budget_message(rejected), rejected)

    for _ in range(retries):
        p = random_prime(lambda_, rng)
        v = screen_prime(F, p)
        if v.good and strategy is Strategy.LasVegas:
            v = verify_prime(F, p)
        if v.good:
            return v
        rejected.append(v)
    raise RetryBudgetExhausted(_budget_message(rejected), rejected)


def _budget_message(rejected):
    shown = ", ".join(f"{v.p}:{v.reason.value}" for v in rejected[:8])
    more = f" and {len(rejected) - 8} more" if len(rejected) > 8 else ""
    return f"no good prime after {len(rejected)} candidates ({shown}{more})"
