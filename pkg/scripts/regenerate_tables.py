"""Regenerate a full coefficient table set and compare it with the built-in one.

    python3 scripts/regenerate_tables.py --kmax 32 --eps 5e-14 --out tables.txt --workers 4

Slow: one Walsh search per table, minutes each at 50 digits.
"""
import argparse
import logging
import time

from minimax_boys.pipeline import generate_tables, verify_tables
from minimax_boys.tables import emit_tables

ap = argparse.ArgumentParser()
ap.add_argument("--kmax", type=int, default=32)
ap.add_argument("--eps", type=float, default=5e-14)
ap.add_argument("--out", default="tables.txt")
ap.add_argument("--workers", type=int, default=1)
ap.add_argument("--dps", type=int, default=50)
ap.add_argument("--samples", type=int, default=2000)
args = ap.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

t = time.perf_counter()
res = generate_tables(args.kmax, args.eps, dps=args.dps, workers=args.workers)
print(f"generated in {time.perf_counter() - t:.0f} s, x0 = {res.tables.x0!r}, x1 = {res.tables.x1!r}")
for r in res.reports:
    print(f"{r.kind} k={r.k:2d} (n, m) = ({r.n}, {r.m})  weighted sup error {r.sup_error:.3e}"
          + ("" if r.met_tolerance else "  MISSED"))
with open(args.out, "w") as fh:
    fh.write(emit_tables(res.tables))
rep = verify_tables(res.tables, args.samples)
print("\n".join(rep.lines()))
print(f"max error {rep.worst:.3e}: {'PASS' if rep.passed else 'FAIL'}")
