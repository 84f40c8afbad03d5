"""Empirical scaling harness.

For every curve of a family the harness picks a prime, reduces, and times
the modular symbolic stage (reduction plus singular parts of the places
above x = 0).  It records the output size delta, the median wall time and
the peak coefficient bit-size on both sides: inside the modular run, and in
the polygon tree computed over Q on the same input.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Optional

from .bpoly import BiPoly, integer_discriminant, reduce_mod_p
from .fields import QQ, bit_meter
from .polygon import polygon_tree
from .puiseux import singular_part
from .reduction import choose_prime
from .upoly import UniPoly

__all__ = ["cusp", "tower", "dense", "FAMILIES", "BenchRecord", "BenchResult", "bench_run",
           "loglog_slope", "family_curve"]

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def cusp(k: int) -> BiPoly:
    """``y^k - x^(k+1)``."""
    if k < 1:
        raise ValueError("cusp(k) needs k >= 1")
    return BiPoly.from_dict(QQ, {(0, k): 1, (k + 1, 0): -1})


def tower(k: int) -> BiPoly:
    """Minimal polynomial of ``y = sum_i c_i x^(1 - 2^-i)``, ``i = 1..k``.

    The constants ``c_i`` are the first k primes.  The single place above
    x = 0 has ``e = 2^k`` and every level of its polygon tree carries a
    repeated characteristic root, so the tree has depth k.  The polynomial
    is the norm of ``y - Y(t)`` from Q(t) down to Q(x), ``x = t^(2^k)``,
    taken one square root at a time.
    """
    if not 1 <= k <= len(_PRIMES):
        raise ValueError(f"tower(k) needs 1 <= k <= {len(_PRIMES)}")
    n = 1 << k
    terms = {(0, 1): 1}
    for i in range(1, k + 1):
        terms[(n - (1 << (k - i)), 0)] = -_PRIMES[i - 1]
    G = BiPoly.from_dict(QQ, terms)         # x plays the role of t here
    for _ in range(k):
        conj = BiPoly(QQ, [UniPoly(QQ, [c if i % 2 == 0 else -c for i, c in enumerate(a.coeffs)])
                           for a in G.coeffs])
        H = G * conj                          # even in t
        G = BiPoly(QQ, [UniPoly(QQ, a.coeffs[::2]) for a in H.coeffs])
    return G


def dense(k: int, seed: int = 0, height: int = 9) -> BiPoly:
    """Random dense curve of total degree k, monic in y, squarefree over Q.

    Coefficients of ``x^i y^j`` (``i + j <= k``, ``j < k``) are uniform in
    ``[-height, height]``; the rng stream is derived from ``(seed, k)``.
    """
    if k < 1:
        raise ValueError("dense(k) needs k >= 1")
    rng = random.Random(f"dense:{seed}:{k}")
    while True:
        terms = {(0, k): 1}
        for j in range(k):
            for i in range(k - j + 1):
                terms[(i, j)] = rng.randint(-height, height)
        terms[(k, 0)] = terms[(k, 0)] or 1   # keep total degree k in x too
        F = BiPoly.from_dict(QQ, terms)
        if F.x_content() == 0 and (k == 1 or not integer_discriminant(F).is_zero()):
            return F


FAMILIES = {"cusp": cusp, "tower": tower, "dense": dense}


def family_curve(family: str, k: int, seed: int = 0) -> BiPoly:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return dense(k, seed) if family == "dense" else FAMILIES[family](k)


@dataclass(frozen=True)
class BenchRecord:
    curve: str
    d: int
    p: int
    delta: int
    time: float              # median seconds per pipeline run
    peak_bits_mod: int
    peak_bits_q: Optional[int]
    runs: int

    def as_dict(self):
        return asdict(self)


@dataclass
class BenchResult:
    family: str
    records: list
    slope: Optional[float]

    def as_dict(self):
        return {"family": self.family, "slope": self.slope,
                "records": [r.as_dict() for r in self.records]}


def loglog_slope(xs, ys) -> Optional[float]:
    """Least-squares slope of ``log y`` against ``log x``; None when undefined."""
    if len(xs) < 2:
        return None
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = statistics.fmean(lx), statistics.fmean(ly)
    sxx = sum((a - mx) ** 2 for a in lx)
    if sxx == 0:
        return None
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sxx


def _median_time(fn, runs, min_batch):
    # batch calls until one batch lasts min_batch seconds, as timeit does
    reps = 1
    while True:
        t = time.perf_counter()
        for _ in range(reps):
            fn()
        dt = time.perf_counter() - t
        if dt >= min_batch or reps >= 1 << 16:
            break
        reps *= 2
    samples = []
    for _ in range(runs):
        t = time.perf_counter()
        for _ in range(reps):
            fn()
        samples.append((time.perf_counter() - t) / reps)
    return statistics.median(samples)


def bench_run(family: str, sizes, strategy="mc", seed: int = 0, lambda_: int = 62,
              runs: int = 5, min_batch: float = 0.05, q_growth: bool = True) -> BenchResult:
    """Run the modular pipeline on ``family(k)`` for every k in ``sizes``.

    Each instance draws its prime from its own rng stream, derived from
    ``seed`` and the instance index, so records do not depend on the
    order in which sizes are processed.
    """
    runs = max(runs, 5)
    records = []
    for idx, k in enumerate(sizes):
        F = family_curve(family, k, seed)
        rng = random.Random(f"bench:{seed}:{idx}")
        p = choose_prime(F, strategy, lambda_, rng).p

        def pipeline():
            return singular_part(reduce_mod_p(F, p))

        with bit_meter() as m:
            ps = pipeline()
        peak_q = None
        if q_growth:
            with bit_meter() as mq:
                polygon_tree(F, check=False)
            peak_q = mq.peak
        t = _median_time(pipeline, runs, min_batch)
        records.append(BenchRecord(f"{family}({k})", F.deg_y, p, ps.output_size, t,
                                   m.peak, peak_q, runs))
    slope = loglog_slope([r.delta for r in records], [r.time for r in records])
    return BenchResult(family, records, slope)
