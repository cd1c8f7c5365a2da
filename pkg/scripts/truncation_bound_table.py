"""Series truncation bound as a function of x and L (k = 0), and where it crosses 1.28e-69."""
from mpmath import mp

from minimax_boys.reference import truncation_bound
from minimax_boys.tables import embedded_default

T = embedded_default()
for x in (10.0, 19.36, T.x0, 25.0, T.x1, 40.0):
    row = "  ".join(f"L={L}: {mp.nstr(truncation_bound(0, x, L), 4)}" for L in (150, 185, 200))
    print(f"x = {x:<18.15g} {row}")
L = next(L for L in range(150, 400) if truncation_bound(0, T.x1, L) <= 1.28e-69)
print(f"smallest L with bound <= 1.28e-69 at x1: {L}")
