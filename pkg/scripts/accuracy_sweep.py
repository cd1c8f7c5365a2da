"""Max absolute error of the built-in tables per k and region against the series reference.

    python3 scripts/accuracy_sweep.py --samples 100000
"""
import argparse
import time

from minimax_boys.pipeline import verify_tables
from minimax_boys.tables import embedded_default

ap = argparse.ArgumentParser()
ap.add_argument("--samples", type=int, default=10_000, help="per region")
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--x-max", type=float, default=200.0)
args = ap.parse_args()

t = time.perf_counter()
rep = verify_tables(embedded_default(), args.samples, seed=args.seed, x_max=args.x_max)
print("\n".join(rep.lines()))
for region in "ABC":
    k, e = max(((k, per[region]) for k, per in rep.errors.items()), key=lambda t: t[1].max_error)
    print(f"region {region}: worst {e.max_error:.3e} at k={k}, l={e.l}, x={e.x!r}")
print(f"overall {rep.worst:.3e} ({time.perf_counter() - t:.0f} s)")
