"""Genus of a plane curve from its places over the x-line.

Riemann-Hurwitz for the degree-N map ``(x, y) -> x`` with tame ramification
reads ``2g - 2 = -2N + sum over places of f*(e - 1)``, the sum running over
the places above every critical center.  Conjugate centers (roots of one
irreducible factor of degree k) are treated once, over ``F_{p^k}``, and
weighted by k.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bpoly import BiPoly, discriminant_y, is_squarefree_y, reduce_mod_p
from .errors import InputError, NonIntegralGenus, NotSquarefree, SmallCharacteristic
from .extension import extend_field
from .fields import FqContext
from .puiseux import places_above
from .reduction import PrimeVerdict, Status, choose_prime
from .upoly import factor_fq, squarefree_decomposition

__all__ = ["GenusReport", "genus_mod_p", "genus_over_q", "critical_factors"]


@dataclass
class GenusReport:
    genus: int
    prime: PrimeVerdict
    contributions: list = dc_field(default_factory=list)   # (center, sum f*(e-1), multiplier)
    checks: list = dc_field(default_factory=list)          # (center, sum e*f, deg_y)
    deg_y: int = 0

    def total(self):
        return sum(k * c for _, c, k in self.contributions)

    def as_dict(self):
        return {
            "genus": self.genus,
            "prime": {"p": self.prime.p, "status": self.prime.status.value},
            "contributions": [{"center": c, "ramification": r, "multiplier": k}
                              for c, r, k in self.contributions],
            "checks": [{"center": c, "conservation": s, "deg_y": n} for c, s, n in self.checks],
        }


def critical_factors(F: BiPoly):
    """Monic irreducible factors of ``disc_y(F) * lc_y(F)`` over the prime field."""
    D = discriminant_y(F) * F.lc_y()
    if D.degree < 1:
        return []
    sqf = squarefree_decomposition(D)
    out = []
    for g, _ in sqf.parts:
        out.extend(h for h, _ in factor_fq(g).factors)
    return sorted(out, key=lambda h: (h.degree, h.key()))


def genus_mod_p(F: BiPoly, verdict: PrimeVerdict | None = None) -> GenusReport:
    """Geometric genus of the curve ``F = 0`` over a prime field F_p.

    The curve is assumed absolutely irreducible; this is not checked.
    """
    K = F.field
    if not isinstance(K, FqContext) or K.k != 1:
        raise InputError("genus_mod_p expects a polynomial over a prime field")
    N = F.deg_y
    if N < 1:
        raise InputError("the curve must involve y")
    if K.p <= N:
        raise SmallCharacteristic(f"characteristic {K.p} must exceed deg_y = {N}")
    if not is_squarefree_y(F):
        raise NotSquarefree("F is not squarefree in y")
    verdict = verdict or PrimeVerdict(K.p, Status.GoodScreened)
    report = GenusReport(0, verdict, deg_y=N)
    centers = [(extend_field(K, g), g) for g in critical_factors(F)]
    for ext, g in centers:
        ps = places_above(F, ext.root, check=False)
        name = g.to_str("x") if g.degree > 1 else str(int(ext.root))
        _record(report, f"root of {name}" if g.degree > 1 else name, ps, g.degree)
    _record(report, "infinity", places_above(F, None, check=False), 1)
    two_g_minus_2 = -2 * N + report.total()
    if two_g_minus_2 % 2 or two_g_minus_2 < -2:
        raise NonIntegralGenus(f"Riemann-Hurwitz gives 2g - 2 = {two_g_minus_2}")
    report.genus = two_g_minus_2 // 2 + 1
    return report


def _record(report, name, ps, k):
    report.checks.append((name, ps.conservation, report.deg_y))
    if ps.conservation != report.deg_y:
        raise NonIntegralGenus(f"places above {name} account for {ps.conservation} roots")
    report.contributions.append((name, ps.ramification(), k))


def genus_over_q(F: BiPoly, strategy="lv", lambda_: int = 62, rng=None) -> GenusReport:
    """Genus of a curve over Q through one good prime."""
    verdict = choose_prime(F, strategy, lambda_, rng)
    return genus_mod_p(reduce_mod_p(F, verdict.p), verdict)
