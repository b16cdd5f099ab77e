"""Command-line interface.

Every subcommand maps onto one library operation.  Output is line-oriented
TSV by default, JSON with --json.  Exit codes: 0 success, 1 usage error,
2 computational precondition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import correspondence as corr
from . import density, trinomials
from .cache import load_cp_cache, load_roots_cache
from .errors import TrinodiscError
from .fproots import classify_roots, fp_roots, is_wieferich
from .primes import primes_list
from .scan import scan


def _emit(args, rows: list[dict]) -> None:
    if args.json:
        print(json.dumps(rows if len(rows) != 1 else rows[0]))
    else:
        for row in rows:
            print("\t".join(str(v) for v in row.values()))


def _frac_str(f: Fraction, digits: int = 12) -> str:
    from decimal import Decimal, localcontext

    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(f.numerator) / Decimal(f.denominator))


def _cmd_scan(args) -> list[dict]:
    workers = int(os.environ.get("TRINODISC_WORKERS", args.workers))
    summary = scan(
        args.min_p,
        args.max_p,
        workers=workers,
        roots_path=args.roots_cache,
        cp_path=args.cp_cache,
        resume=args.resume,
        method=args.method,
        log=(lambda msg: print(msg, file=sys.stderr)) if args.verbose else None,
    )
    return [
        {
            "primes": summary.prime_count,
            "computed": summary.computed,
            "resumed": summary.resumed,
            "nonempty_cp": summary.nonempty_cp,
            "seconds": round(summary.wall_time, 3),
        }
    ]


def _cmd_roots(args) -> list[dict]:
    roots = fp_roots(args.prime, method=args.method)
    return [{"p": args.prime, "count": len(roots),
             "roots": ";".join(map(str, roots))}]


def _cmd_census(args) -> list[dict]:
    table = density.census(args.max, load_roots_cache(args.roots_cache))
    rows = []
    for m in sorted(set(table.actual) | set(table.predicted)):
        rows.append(
            {
                "roots": m,
                "actual": table.actual.get(m, 0),
                "predicted": round(table.predicted.get(m, 0.0), 1),
            }
        )
    return rows


def _cmd_cp(args) -> list[dict]:
    cp = density.build_cp(args.prime)
    return [{"p": cp.p, "modulus": cp.modulus,
             "residues": ";".join(map(str, cp.residues))}]


def _cmd_dpq(args) -> list[dict]:
    if args.cp_cache:
        cache = load_cp_cache(args.cp_cache)
        cp, cq = cache[args.p], cache[args.q]
    else:
        cp, cq = density.build_cp(args.p), density.build_cp(args.q)
    pairs = density.build_dpq(cp, cq)
    return [{"a": a, "b": b} for a, b in pairs.pairs] or [{"a": "", "b": ""}]


def _cmd_density(args) -> list[dict]:
    bounds = density.ie_bounds(args.max, load_cp_cache(args.cp_cache))
    lo, hi = bounds.decimal()
    return [
        {
            "lower": lo,
            "upper": hi,
            "triple_correction": _frac_str(bounds.triple_correction),
        }
    ]


def _cmd_estimate(args) -> list[dict]:
    lo, hi = density.density_estimate(
        args.max, load_cp_cache(args.cp_cache), x1=args.x1
    )
    return [{"lower": _frac_str(lo), "upper": _frac_str(hi)}]


def _cmd_squarefree(args) -> list[dict]:
    hits = density.squarefree_scan(args.max_n, args.prime_count)
    return [{"n": n, "p": p} for n, p in sorted(hits.items())]


def _cmd_tailsum(args) -> list[dict]:
    return [{"sum": _frac_str(density.tail_sum(args.lo, args.hi), digits=20)}]


def _cmd_verify(args) -> list[dict]:
    ok = corr.d_eps_divisible(args.prime, args.n, args.m, args.eps)
    return [{"divisible": str(ok).lower()}]


def _cmd_alpha(args) -> list[dict]:
    w = corr.alpha(args.prime, args.m, args.eps, args.n)
    return [{"x": w.x, "k": w.k}]


def _cmd_beta(args) -> list[dict]:
    n = corr.beta(args.prime, args.m, args.eps, args.x, args.k)
    return [{"n": n}]


def _cmd_classify(args) -> list[dict]:
    census = classify_roots(args.prime, fp_roots(args.prime))
    return [
        {
            "p": census.p,
            "total": census.total,
            "trivial": census.trivial,
            "cyclotomic": census.cyclotomic,
            "wieferich": census.wieferich,
            "sixpacks": census.sixpacks,
        }
    ]


def _parse_poly(text: str) -> trinomials.Poly:
    return trinomials.Poly(int(c) for c in text.split(","))


def _cmd_resultant(args) -> list[dict]:
    value = trinomials.resultant(_parse_poly(args.f), _parse_poly(args.g))
    return [{"resultant": value}]


def _cmd_strange(args) -> list[dict]:
    ks = range(args.max_k + 1) if args.max_k is not None else [args.k]
    return [
        {"k": k, "holds": str(trinomials.strange_divisibility_check(k)).lower()}
        for k in ks
    ]


def _cmd_abc(args) -> list[dict]:
    rep = trinomials.abc_report(args.k)
    return [
        {
            "k": rep.k,
            "n": rep.n if rep.n is not None else f"~1e{rep.n_log10:.0f}",
            "seven_power": str(rep.seven_power).lower(),
            "square_divides_b": str(rep.square_divides_b).lower(),
            "bound_log": float(rep.bound_log) if rep.k <= 2 else str(rep.bound_log),
            "note": rep.note,
        }
    ]


def _cmd_wieferich(args) -> list[dict]:
    if args.prime is not None:
        return [{"p": args.prime, "wieferich": str(is_wieferich(args.prime)).lower()}]
    found = [p for p in primes_list(3, args.max) if is_wieferich(p)]
    return [{"p": p, "wieferich": "true"} for p in found] or [{"p": "", "wieferich": ""}]


def _cmd_inp(args) -> list[dict]:
    member, witness = corr.in_p(args.prime, args.eps)
    row = {"member": str(member).lower()}
    if witness is not None:
        row["n"], row["m"] = witness
    return [row]


def _cmd_inptilde(args) -> list[dict]:
    return [{"member": str(corr.in_p_tilde(args.prime)).lower()}]


def _eps(value: str) -> int:
    if value in ("+1", "1"):
        return 1
    if value == "-1":
        return -1
    raise argparse.ArgumentTypeError("eps must be +1 or -1")


def _sign(value: str) -> int:
    return _eps(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trinodisc",
        description="Square divisors of trinomial values and consecutive "
        "p-th powers modulo p**2",
    )
    parser.add_argument("--json", action="store_true", help="JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="scan a prime range into cache files")
    p.add_argument("--min-p", type=int, default=3)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--roots-cache", required=True)
    p.add_argument("--cp-cache")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--method", choices=("sieve", "direct"), default="sieve")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("roots", help="roots of ((x+1)^p - x^p - 1)/p mod p")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--method", choices=("sieve", "direct"), default="sieve")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("census", help="root-count histogram vs Poisson prediction")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--roots-cache", required=True)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("cp", help="exceptional residue set of a prime")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_cp)

    p = sub.add_parser("dpq", help="compatible residue pairs of two primes")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cp-cache")
    p.set_defaults(func=_cmd_dpq)

    p = sub.add_parser("density", help="inclusion-exclusion density bounds")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--cp-cache", required=True)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("estimate", help="heuristic density bracket with tail factor")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--cp-cache", required=True)
    p.add_argument("--x1", type=int, default=10**9)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("squarefree", help="scan small n for square divisors")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--prime-count", type=int, required=True)
    p.set_defaults(func=_cmd_squarefree)

    p = sub.add_parser("tailsum", help="sum 1/(p(p-1)) over a prime range")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.set_defaults(func=_cmd_tailsum)

    p = sub.add_parser("verify", help="does p^2 divide n^n + eps(n-m)^(n-m) m^m")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eps", type=_eps, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("alpha", help="residue class -> consecutive-power witness")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eps", type=_eps, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("beta", help="consecutive-power witness -> residue class")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eps", type=_eps, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser("classify", help="orbit census of a prime's roots")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("resultant", help="resultant of two integer polynomials")
    p.add_argument("--f", required=True, help="coefficients, constant first, comma-separated")
    p.add_argument("--g", required=True)
    p.set_defaults(func=_cmd_resultant)

    p = sub.add_parser("strange", help="(12k^2+6k+1)^2 | (6k+2)^(6k+2)-(6k+1)^(6k+1)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--max-k", type=int)
    p.set_defaults(func=_cmd_strange)

    p = sub.add_parser("abc", help="abc-triple checks for n = 8^(7^k)")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_abc)

    p = sub.add_parser("wieferich", help="Wieferich test or range search")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--prime", type=int)
    group.add_argument("--max", type=int)
    p.set_defaults(func=_cmd_wieferich)

    p = sub.add_parser("inp", help="square-divisor membership with witness")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--eps", type=_eps, required=True)
    p.set_defaults(func=_cmd_inp)

    p = sub.add_parser("inptilde", help="membership beyond sixth-root pairs")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_inptilde)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        rows = args.func(args)
    except TrinodiscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
