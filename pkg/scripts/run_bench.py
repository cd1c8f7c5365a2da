"""Fused benchmark timings over N and thread counts; correctness checked against the direct oracle once."""
import argparse

from minimax_boys.bench import BenchSpec, direct_z, make_inputs, max_relative_deviation, run_bench

ap = argparse.ArgumentParser()
ap.add_argument("--N", type=int, nargs="+", default=[256, 1024, 2048])
ap.add_argument("--k", type=int, default=12)
ap.add_argument("--threads", type=int, nargs="+", default=[1, 2, 4])
ap.add_argument("--repeat", type=int, default=3)
args = ap.parse_args()

for N in args.N:
    for th in args.threads:
        spec = BenchSpec(N=N, k=args.k, threads=th)
        best = min(run_bench(spec).elapsed for _ in range(args.repeat))
        print(f"N={N:5d} k={args.k} threads={th}: {best:.4f} s  ({N * N / best:.3e} elements/s)")
spec = BenchSpec(N=256, k=args.k)
dev = max_relative_deviation(run_bench(spec).z, direct_z(make_inputs(spec), spec.k))
print(f"N=256 deviation from direct oracle {dev:.3e} (tolerance {256 * args.k * 1e-12:.3e})")
