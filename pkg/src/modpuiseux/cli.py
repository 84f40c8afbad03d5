"""Command-line interface.

    modpuiseux polygon  POLY [--field F] [--svg PATH]
    modpuiseux tree     POLY [--field F]
    modpuiseux puiseux  POLY [--field F] [--trunc N] [--center X0|inf]
    modpuiseux goodprime POLY [--strategy S] [--lambda BITS] [--prime P]
    modpuiseux genus    POLY [--field P] [--strategy S] [--lambda BITS]
    modpuiseux bench    FAMILY --sizes 2..9 [--out PATH]

Exit status is 0 on success, 1 for bad input or violated preconditions and
2 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction

from .bench import bench_run
from .bpoly import BiPoly, coerce_field, reduce_mod_p
from .errors import InputError, InternalError, ParseError
from .fields import QQ, fq_make, is_prime, prime_field
from .genus import genus_mod_p, genus_over_q
from .parsing import parse_bipoly, parse_unipoly
from .polygon import newton_polygon, polygon_svg, polygon_tree
from .puiseux import places_above, rnpuiseux
from .reduction import Status, choose_prime, screen_prime, verify_prime
from .upoly import find_irreducible

__all__ = ["main", "build_parser", "parse_field"]


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors: exit 1, not argparse's 2
    def error(self, message):
        raise ParseError(message)


def parse_field(spec: str):
    """``p``, ``p,k`` or ``p,k,modulus`` (modulus a polynomial in z)."""
    parts = [s.strip() for s in spec.split(",", 2)]
    try:
        p = int(parts[0])
        k = int(parts[1]) if len(parts) > 1 else 1
    except ValueError:
        raise ParseError(f"bad field specification {spec!r}") from None
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1:
        raise InputError("extension degree must be positive")
    Fp = prime_field(p)
    if k == 1 and len(parts) < 3:
        return Fp
    if len(parts) == 3:
        m = parse_unipoly(parts[2], Fp)
        if m.degree != k:
            raise InputError(f"modulus has degree {m.degree}, expected {k}")
    else:
        m = find_irreducible(Fp, k)
    return fq_make(p, m.monic())


def _over(F: BiPoly, K):
    if K is None or K is QQ:
        return F
    G = reduce_mod_p(F, K.p)
    return G if K.k == 1 else coerce_field(G, K)


def _curve_text(F: BiPoly, K):
    # the input has coefficients in Q, so its F_p image prints in the input grammar
    if K is None or K is QQ:
        return F.to_str()
    return reduce_mod_p(F, K.p).to_str()


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PUISEUX_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"PUISEUX_SEED must be an integer, got {env!r}") from None
    return None


def _rng(args):
    return random.Random(_seed(args))


def _emit(args, data, text):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _field_name(K):
    return "Q" if K is None or K is QQ else repr(K)


# ---------------------------------------------------------------------------
# commands


def cmd_polygon(args):
    F = parse_bipoly(args.poly)
    K = parse_field(args.field) if args.field else None
    G = _over(F, K)
    poly = newton_polygon(G)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(polygon_svg(G))
    edges = [{"q": e.q, "m": e.m, "l": e.l, "j0": e.j0, "j1": e.j1, "slope": str(e.slope)}
             for e in poly.edges]
    lines = [f"curve: {_curve_text(F, K)} over {_field_name(K)}"]
    lines += [f"edge (q={e.q}, m={e.m}, l={e.l}) from j={e.j0} to j={e.j1}, slope {e.slope}"
              for e in poly.edges]
    if not poly.edges:
        lines.append("no edges")
    _emit(args, {"field": _field_name(K), "points": [list(p) for p in poly.points], "edges": edges},
          "\n".join(lines))


def cmd_tree(args):
    F = parse_bipoly(args.poly)
    K = parse_field(args.field) if args.field else None
    G = _over(F, K)
    T = polygon_tree(G, rng=_rng(args))
    _emit(args, {"field": _field_name(K), "tree": T.as_dict()},
          f"curve: {_curve_text(F, K)} over {_field_name(K)}\n{T.to_text()}")


def _parse_center(text, K):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return None
    if K.k > 1:
        return parse_unipoly(text, K, var="z")(K.gen)
    try:
        return K(Fraction(text.strip()))
    except ValueError:
        raise ParseError(f"bad center {text!r}") from None


def cmd_puiseux(args):
    F = parse_bipoly(args.poly)
    rng = _rng(args)
    if args.field:
        K = parse_field(args.field)
    else:
        K = prime_field(choose_prime(F, args.strategy, args.lam, rng).p)
    G = _over(F, K)
    if args.center is None:
        ps = rnpuiseux(G, args.trunc, rng)
    else:
        ps = places_above(G, _parse_center(args.center, K), args.trunc, rng)
    lines = [f"curve: {_curve_text(F, K)} over {_field_name(K)}, center {ps.center_repr()}"]
    for x in ps.expansions:
        X = f"{x.lam!r}*T^{'-' if x.center is None else ''}{x.e}"
        Y = " + ".join(f"{c!r}*T^{n}" for n, c in x.terms) or "0"
        lines.append(f"e={x.e} f={x.f} over {x.field!r}{' (pole: 1/Y)' if x.pole else ''}: "
                     f"X = {X}, Y = {Y} + O(T^{x.trunc})")
    _emit(args, ps.as_dict(), "\n".join(lines))


def cmd_goodprime(args):
    F = parse_bipoly(args.poly)
    if args.prime is not None:
        v = screen_prime(F, args.prime)
        if v.status is Status.GoodScreened and args.strategy != "mc":
            v = verify_prime(F, args.prime)
    else:
        v = choose_prime(F, args.strategy, args.lam, _rng(args))
    text = f"p = {v.p}: {v.status.value}" + (f" ({v.reason.value})" if v.reason else "")
    _emit(args, v.as_dict(), text)


def cmd_genus(args):
    F = parse_bipoly(args.poly)
    if args.field:
        K = parse_field(args.field)
        if K.k != 1:
            raise InputError("genus needs a prime field")
        v = screen_prime(F, K.p)
        if not v.good:
            raise InputError(f"p = {K.p} is not a good prime: {v.reason.value}")
        rep = genus_mod_p(reduce_mod_p(F, K.p), verify_prime(F, K.p))
    else:
        rep = genus_over_q(F, args.strategy, args.lam, _rng(args))
    lines = [f"genus {rep.genus} (p = {rep.prime.p}, {rep.prime.status.value})"]
    lines += [f"  {c}: ramification {r} x{k}" for c, r, k in rep.contributions]
    _emit(args, rep.as_dict(), "\n".join(lines))


def _sizes(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ParseError("empty size list")
    return out


def cmd_bench(args):
    try:
        sizes = _sizes(args.sizes)
    except ValueError:
        raise ParseError(f"bad size list {args.sizes!r}") from None
    seed = _seed(args) or 0
    res = bench_run(args.family, sizes, args.strategy, seed, args.lam, runs=args.runs,
                    q_growth=not args.no_q)
    if args.out:
        if args.out.endswith(".csv"):
            with open(args.out, "w", newline="", encoding="utf-8") as fh:
                w = csv.DictWriter(fh, fieldnames=list(res.records[0].as_dict()))
                w.writeheader()
                for r in res.records:
                    w.writerow(r.as_dict())
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(res.as_dict(), fh, indent=2)
    lines = [f"{'curve':<12}{'d':>4}{'delta':>7}{'time[s]':>12}{'bits(mod)':>11}{'bits(Q)':>9}"]
    for r in res.records:
        q = "-" if r.peak_bits_q is None else str(r.peak_bits_q)
        lines.append(f"{r.curve:<12}{r.d:>4}{r.delta:>7}{r.time:>12.3e}{r.peak_bits_mod:>11}{q:>9}")
    lines.append("slope: " + ("absent" if res.slope is None else f"{res.slope:.3f}"))
    _emit(args, res.as_dict(), "\n".join(lines))


# ---------------------------------------------------------------------------


def _common(strategy="lv"):
    # a fresh parent per command: argparse shares parent actions, defaults included
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="p, p,k or p,k,modulus-in-z")
    common.add_argument("--trunc", type=int, default=8)
    common.add_argument("--strategy", choices=["mc", "lv", "det"], default=strategy)
    common.add_argument("--lambda", dest="lam", type=int, default=62, metavar="BITS")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=["json", "text"], default="text")
    return common


def build_parser():
    ap = _Parser(prog="modpuiseux", description="Modular Newton-Puiseux expansions and genus.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("polygon", parents=[_common()], help="Newton polygon at x = 0")
    p.add_argument("poly")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("tree", parents=[_common()], help="polygon tree at x = 0")
    p.add_argument("poly")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("puiseux", parents=[_common()], help="rational Puiseux expansions")
    p.add_argument("poly")
    p.add_argument("--center", help="x0 (integer, or polynomial in z over F_p^k) or 'inf'")
    p.set_defaults(func=cmd_puiseux)

    p = sub.add_parser("goodprime", parents=[_common()], help="choose or test a prime")
    p.add_argument("poly")
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_goodprime)

    p = sub.add_parser("genus", parents=[_common()], help="genus of the curve")
    p.add_argument("poly")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("bench", parents=[_common("mc")], help="empirical scaling probe")
    p.add_argument("family", choices=["cusp", "tower", "dense"])
    p.add_argument("--sizes", default="2..9")
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--out", metavar="PATH", help="write records as JSON or .csv")
    p.add_argument("--no-q", action="store_true", help="skip the char-0 bit-size run")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:      # anything unexpected is a bug, not bad input
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
