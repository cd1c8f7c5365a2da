"""Command-line interface: eval, gen, verify, bench, regions.

Exit codes: 0 success, 1 input error, 2 verification failure, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .bench import BenchSpec, direct_z, make_inputs, max_relative_deviation, run_bench
from .evaluate import BoysDomainError, boys_batch
from .pipeline import generate_tables, verify_tables
from .regions import NewtonFailure, compute_x0, compute_x1
from .remez.exchange import RemezFailure
from .tables import TableFormatError, embedded_default, emit_tables, load_tables

OK, INPUT_ERROR, VERIFY_FAILED, NO_CONVERGENCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _tables(path):
    return embedded_default() if path is None else load_tables(path)


def cmd_eval(args) -> int:
    batch = boys_batch(args.x, args.k, _tables(args.tables))
    for l, v in enumerate(batch.values):
        print(f"F_{l} {v:.16e}")
    return OK


def cmd_gen(args) -> int:
    res = generate_tables(args.kmax, args.eps, dps=args.dps, max_total=args.max_total,
                          workers=args.workers, seed=args.seed)
    text = emit_tables(res.tables)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"x0 {res.tables.x0!r}")
    print(f"x1 {res.tables.x1!r}")
    missed = [r for r in res.reports if not r.met_tolerance]
    for r in res.reports:
        note = "" if r.met_tolerance else "  tolerance not met"
        print(f"table {r.kind} k={r.k} n={r.n} m={r.m} error {r.sup_error:.3e}{note}")
    if missed:
        print(f"error: {len(missed)} table(s) did not reach eps {args.eps}", file=sys.stderr)
        return NO_CONVERGENCE
    rep = verify_tables(res.tables, args.samples, seed=args.seed)
    for line in rep.lines():
        print(line)
    if not rep.passed:
        print(f"error: generated tables fail verification (max error {rep.worst:.3e})", file=sys.stderr)
        return VERIFY_FAILED
    print(f"wrote {args.out}")
    return OK


def cmd_verify(args) -> int:
    t = _tables(args.tables)
    regions = args.regions.upper()
    if not regions or set(regions) - set("ABC"):
        raise UsageError("--regions takes letters from ABC")
    rep = verify_tables(t, args.samples, seed=args.seed, regions=regions, x_max=args.x_max)
    for line in rep.lines():
        print(line)
    print(f"max error {rep.worst:.3e} (eps {t.eps_tol:g}): {'PASS' if rep.passed else 'FAIL'}")
    return OK if rep.passed else VERIFY_FAILED


def cmd_bench(args) -> int:
    spec = BenchSpec(N=args.N, k=args.k, seed=args.seed, domain_hi=args.domain_hi, threads=args.threads)
    res = run_bench(spec)
    print(f"N {spec.N} k {spec.k} seed {spec.seed} threads {spec.threads}")
    print(f"elapsed {res.elapsed:.6f} s")
    print(f"sum(z) {float(res.z.sum()):.16e}")
    print(f"sha256(z) {res.checksum}")
    if args.check:
        ref = direct_z(make_inputs(spec), spec.k)
        dev = max_relative_deviation(res.z, ref)
        tol = spec.N * spec.k * 1e-12
        print(f"max relative deviation from direct summation {dev:.3e} (tolerance {tol:.3e})")
        if not dev <= tol:
            return VERIFY_FAILED
    return OK


def cmd_regions(args) -> int:
    print(f"x0 {float(compute_x0(args.kmax)):.15f}")
    print(f"x1 {float(compute_x1(args.kmax, args.eps)):.15f}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minimax-boys", description="Boys functions by rational minimax approximation.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress and Remez iterations")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="print F_0..F_k at x")
    e.add_argument("--x", type=float, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--tables", help="table file (default: built-in tables)")
    e.set_defaults(func=cmd_eval)

    g = sub.add_parser("gen", help="generate a table file")
    g.add_argument("--kmax", type=int, required=True)
    g.add_argument("--eps", type=float, required=True)
    g.add_argument("--out", required=True)
    g.add_argument("--dps", type=int, default=50, help="working decimal digits")
    g.add_argument("--max-total", type=int, default=24, help="largest n+m tried")
    g.add_argument("--workers", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--samples", type=int, default=2000, help="self-check samples per region")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="compare tables against the series reference")
    v.add_argument("--tables")
    v.add_argument("--samples", type=int, default=10_000, help="samples per region")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--regions", default="ABC")
    v.add_argument("--x-max", type=float, default=200.0, help="upper end of region C sampling")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="fused throughput benchmark")
    b.add_argument("--N", type=int, default=1024)
    b.add_argument("--k", type=int, default=12)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--domain-hi", type=float, default=30.0)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--check", action="store_true", help="also compare with direct summation")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("regions", help="print x0 and x1")
    r.add_argument("--kmax", type=int, required=True)
    r.add_argument("--eps", type=float, required=True)
    r.set_defaults(func=cmd_regions)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, BoysDomainError, TableFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (RemezFailure, NewtonFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
