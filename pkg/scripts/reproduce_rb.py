"""Rerun the exchange for the region-B table and compare with the built-in r_B."""
import time

from mpmath import mp

from minimax_boys.reference import ReferenceConfig, boys_reference, terms_for_bound
from minimax_boys.remez import RemezProblem, remez_solve
from minimax_boys.tables import embedded_default

T = embedded_default()
cfg = ReferenceConfig(L=terms_for_bound(0, T.x1))
t = time.perf_counter()
res = remez_solve(RemezProblem(f=lambda x: boys_reference(0, x, cfg), a=T.x0, b=T.x1, n=5, m=6))
print(f"converged in {res.iterations} iterations, {time.perf_counter() - t:.1f} s")
print(f"levelled error {mp.nstr(res.levelled_error, 8)}, sup error {mp.nstr(res.sup_error, 8)}")
print(f"{len(res.nodes)} equioscillation nodes")
ours, ref = res.approximant.to_double(), T.r_B
worst = 0.0
for i in range(1000):
    x = T.x0 + (T.x1 - T.x0) * i / 999
    a = sum(c * x**j for j, c in enumerate(ours.numer)) / sum(c * x**j for j, c in enumerate(ours.denom))
    b = sum(c * x**j for j, c in enumerate(ref.numer)) / sum(c * x**j for j, c in enumerate(ref.denom))
    worst = max(worst, abs(a - b) / abs(b))
print(f"max relative difference from built-in r_B: {worst:.3e}")
