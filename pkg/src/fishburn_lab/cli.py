"""Command-line entry point: ``fishburn-lab`` / ``python -m fishburn_lab``.

Exit codes: 0 when every proven claim checked out (a refuted conjecture is
reported as a finding but still exits 0), 1 when a proven claim is refuted,
2 on usage errors or an unreadable cache.
"""

import argparse
import json
import sys

from . import fishburn
from .fishburn import CacheError, TableCache
from .report import CONJECTURE, REFUTED
from .residues import is_prime, residue_sets
from .series import ZZ, Zmod, dissect, format_series
from .suite import run_tasks, suite_tasks


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _positive(text):
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _prime(text):
    v = _nonneg(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"not a prime: {v}")
    return v


def _modulus(text):
    v = _nonneg(text)
    if not 2 <= v < 1 << 63:
        raise argparse.ArgumentTypeError("modulus must lie in [2, 2**63)")
    return v


_COMMON_DEFAULTS = {"format": "text", "cache": None, "no_cache": False, "jobs": 1}


def build_parser():
    # SUPPRESS keeps subparser copies of these options from overwriting values
    # given before the subcommand; real defaults are filled in by main()
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json"),
                        help="human-readable text (default) or one JSON object per line")
    common.add_argument("--cache", metavar="DIR",
                        help=f"coefficient cache directory (default: ${fishburn.CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true", help="ignore the coefficient cache")
    common.add_argument("--jobs", type=_positive, help="reports computed in parallel (default 1)")

    parser = argparse.ArgumentParser(prog="fishburn-lab", parents=[common],
                                     description="Fishburn numbers and their congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xi", parents=[common], help="Fishburn numbers xi(0..limit)")
    p.add_argument("--limit", type=_nonneg, required=True)
    p.add_argument("--mod", type=_modulus)

    p = sub.add_parser("a-series", parents=[common], help="coefficients a(0..limit)")
    p.add_argument("--limit", type=_nonneg, required=True)
    p.add_argument("--mod", type=_modulus)

    p = sub.add_parser("partial-sum", parents=[common], help="F(q, N) = sum_{n<=N} (q;q)_n")
    p.add_argument("-N", type=_nonneg, required=True)

    p = sub.add_parser("dissect", parents=[common], help="dissect F(q, N) by exponent mod p")
    p.add_argument("-N", type=_nonneg, required=True)
    p.add_argument("-p", type=_prime, required=True)

    p = sub.add_parser("sets", parents=[common], help="pentagonal residue sets S(p), T(p)")
    p.add_argument("-p", type=_prime, nargs="+", required=True)

    p = sub.add_parser("classify", parents=[common], help="mod-23 classification of primes")
    p.add_argument("--p-max", type=int, default=1000)
    p.add_argument("--density-max", type=int)

    verify = sub.add_parser("verify", parents=[common], help="check a proven claim")
    vsub = verify.add_subparsers(dest="claim", required=True)
    v = vsub.add_parser("theorem1", parents=[common])
    v.add_argument("-p", type=_prime, nargs="+", required=True)
    v.add_argument("--n-max", type=_nonneg, default=100)
    v = vsub.add_parser("congruences", parents=[common], help="the nine printed residue classes")
    v.add_argument("--n-max", type=_nonneg, default=200)
    v = vsub.add_parser("lemma5", parents=[common])
    v.add_argument("-p", type=_prime, nargs="+", required=True)
    v.add_argument("-n", type=_positive, nargs="+", required=True)
    v = vsub.add_parser("lemma4", parents=[common])
    v.add_argument("-p", type=_prime, required=True)
    v.add_argument("-n", type=_nonneg, required=True)
    v.add_argument("--max-N", dest="max_N", type=_nonneg, default=3)
    v = vsub.add_parser("lemma2", parents=[common])
    v.add_argument("--trials", type=_positive, default=50)
    v.add_argument("--max-n", type=_positive, default=5)
    v.add_argument("--seed", type=int, default=0)
    v = vsub.add_parser("eq214", parents=[common], help="vanishing of component derivatives at 1")
    v.add_argument("-p", type=_prime, nargs="+", required=True)
    v.add_argument("--max-j", type=_nonneg, default=3)
    v = vsub.add_parser("bernoulli", parents=[common])
    v.add_argument("-p", type=_prime, nargs="+", required=True)
    v.add_argument("--max-order", type=_nonneg, default=2)
    v = vsub.add_parser("a-conjecture", parents=[common])
    v.add_argument("--n-max", type=_nonneg, default=40)

    scan = sub.add_parser("scan", parents=[common], help="scan an open conjecture")
    ssub = scan.add_subparsers(dest="claim", required=True)
    s = ssub.add_parser("prime-power", parents=[common])
    s.add_argument("-p", type=_prime, required=True)
    s.add_argument("-j", dest="power", type=int, default=2)
    s.add_argument("--n-max", type=_nonneg, default=20)
    s = ssub.add_parser("strengthened-lemma5", parents=[common])
    s.add_argument("-p", type=_prime, nargs="+", required=True)
    s.add_argument("-n", type=_positive, nargs="+", required=True)

    sub.add_parser("suite", parents=[common], help="run the full verification battery")
    return parser


def _tasks(args, parser):
    cmd = args.command
    if cmd == "classify":
        if args.p_max < 5:
            parser.error("--p-max must be at least 5")
        return [("classification", {"p_max": args.p_max, "density_max": args.density_max or args.p_max})]
    if cmd == "suite":
        return suite_tasks()
    claim = args.claim
    if claim == "theorem1":
        return [("theorem1", {"p": p, "n_max": args.n_max}) for p in args.p]
    if claim == "congruences":
        return [("known-congruences", {"n_max": args.n_max})]
    if claim in ("lemma5", "strengthened-lemma5"):
        return [(claim, {"p": p, "n": n}) for p in args.p for n in args.n]
    if claim == "lemma4":
        return [("lemma4", {"p": args.p, "n": args.n, "max_N": args.max_N})]
    if claim == "lemma2":
        return [("lemma2", {"trials": args.trials, "max_n": args.max_n, "seed": args.seed})]
    if claim == "eq214":
        return [("eq214", {"p": p, "max_j": args.max_j}) for p in args.p]
    if claim == "bernoulli":
        for p in args.p:
            if p < 5:
                parser.error("bernoulli check needs p >= 5")
        return [("bernoulli", {"p": p, "max_order": args.max_order}) for p in args.p]
    if claim == "a-conjecture":
        return [("a-conjecture", {"n_max": args.n_max})]
    if claim == "prime-power":
        if args.power < 2:
            parser.error("-j must be at least 2")
        if args.p ** args.power >= 1 << 63:
            parser.error("p^j must stay below 2**63")
        return [("prime-power", {"p": args.p, "j": args.power, "n_max": args.n_max})]
    raise AssertionError(claim)


def _emit_reports(reports, fmt, out):
    if fmt == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    else:
        out.write("\n\n".join(r.to_text() for r in reports) + "\n")
    failed = False
    for r in reports:
        if r.status != REFUTED:
            continue
        if r.kind == CONJECTURE:
            print(f"FINDING: open conjecture {r.claim_id} {r.parameters} refuted "
                  f"({len(r.counterexamples)} counterexamples)", file=sys.stderr)
        else:
            failed = True
    return 1 if failed else 0


def _emit_table(table, fmt, out):
    if fmt == "json":
        out.write(json.dumps({"name": table.name,
                              "modulus": "exact" if table.modulus is None else str(table.modulus),
                              "limit": table.computed_to,
                              "values": [str(v) for v in table.values]}, separators=(",", ":")) + "\n")
    else:
        label = f" mod {table.modulus}" if table.modulus is not None else ""
        for n, v in enumerate(table.values):
            out.write(f"{table.name}({n}){label} = {v}\n")


def _series_record(f):
    return [str(c) for c in f.coeffs]


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, value in _COMMON_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    if args.no_cache:
        cache = None
    elif args.cache:
        cache = TableCache(args.cache)
    else:
        cache = fishburn.default_cache()

    try:
        cmd = args.command
        if cmd in ("xi", "a-series"):
            ring = ZZ if args.mod is None else Zmod(args.mod)
            fn = fishburn.xi_coefficients if cmd == "xi" else fishburn.a_coefficients
            _emit_table(fn(args.limit, ring, cache=cache), args.format, out)
            return 0
        if cmd == "partial-sum":
            F = fishburn.partial_sum_F(args.N)
            if args.format == "json":
                out.write(json.dumps({"N": args.N, "coefficients": _series_record(F)}) + "\n")
            else:
                out.write(f"F(q,{args.N}) = {format_series(F)}\n")
            return 0
        if cmd == "dissect":
            table = dissect(fishburn.partial_sum_F(args.N), args.p)
            if args.format == "json":
                out.write(json.dumps({"N": args.N, "p": args.p,
                                      "components": [_series_record(c) for c in table.components]}) + "\n")
            else:
                for i, comp in enumerate(table.components):
                    out.write(f"A_{args.p}({args.N},{i},Q) = {format_series(comp, 'Q')}\n")
            return 0
        if cmd == "sets":
            for p in args.p:
                rs = residue_sets(p)
                if args.format == "json":
                    out.write(json.dumps({"p": p, "S": list(rs.S), "T": list(rs.T)}) + "\n")
                else:
                    out.write(rs.describe() + "\n")
            return 0
        reports = run_tasks(_tasks(args, parser), jobs=args.jobs, cache=cache)
        return _emit_reports(reports, args.format, out)
    except CacheError as exc:
        print(f"fishburn-lab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
