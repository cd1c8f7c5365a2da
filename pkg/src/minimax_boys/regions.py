"""Region boundaries for the three-branch evaluator and the region-A weights.

    A = [0, x0)    minimax seed at order k, downward recursion
    B = [x0, x1)   minimax seed at order 0, upward recursion
    C = [x1, inf)  asymptotic seed, multiplicative upward chain
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from mpmath import mp

from .highprec import DEFAULT_DPS, GUARD_DPS, hp_upper_incomplete_gamma_half

log = logging.getLogger(__name__)


class NewtonFailure(RuntimeError):
    def __init__(self, msg, trace):
        super().__init__(msg)
        self.trace = trace


@dataclass(frozen=True)
class RegionPartition:
    x0: float
    x1: float
    k_max: int
    eps_tol: float

    def __post_init__(self):
        if not 0 < self.x0 < self.x1:
            raise ValueError(f"need 0 < x0 < x1, got x0={self.x0}, x1={self.x1}")
        if not self.eps_tol > 0:
            raise ValueError("eps_tol must be positive")

    @classmethod
    def compute(cls, k_max: int, eps_tol: float) -> "RegionPartition":
        return cls(float(compute_x0(k_max)), float(compute_x1(k_max, eps_tol)), k_max, eps_tol)

    def region(self, x: float) -> str:
        if x < self.x0:
            return "A"
        if x < self.x1:
            return "B"
        return "C"


def compute_x0(k_max: int, dps: int = DEFAULT_DPS):
    """max{1, (prod_{k<k_max} (k + 1/2))^(1/k_max)}: smallest x where upward recursion is stable."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if k_max == 0:
        with mp.workdps(dps):
            return mp.mpf(1)
    with mp.workdps(dps + GUARD_DPS):
        p = mp.one
        for k in range(k_max):
            p *= k + mp.mpf(0.5)
        x0 = max(mp.one, mp.root(p, k_max))
    with mp.workdps(dps):
        return +x0


def asymptotic_error(k: int, x, dps: int = DEFAULT_DPS):
    """|Gamma(k+1/2)/(2 x^(k+1/2)) - F_k(x)| = Gamma(k+1/2, x) / (2 x^(k+1/2))."""
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        err = hp_upper_incomplete_gamma_half(k, x, dps + GUARD_DPS) / (2 * x ** (k + mp.mpf(0.5)))
    with mp.workdps(dps):
        return +err


def compute_x1(k_max: int, eps_tol, dps: int = DEFAULT_DPS, max_iter: int = 100):
    """Root of asymptotic_error(k_max, x) = eps_tol.

    Newton on the log of the residual from x = k_max + 35; bisection on
    [k_max + 1/2, k_max + 200] whenever a step leaves the bracket.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    with mp.workdps(dps + GUARD_DPS):
        eps = mp.mpf(eps_tol)
        if not 0 < eps < 1:
            raise ValueError("eps_tol must lie in (0, 1)")
        s = k_max + mp.mpf(0.5)
        inner = dps + 2 * GUARD_DPS
        log_eps = mp.log(eps)

        def h(x):
            g = hp_upper_incomplete_gamma_half(k_max, x, inner)
            val = mp.log(g) - mp.log(2) - s * mp.log(x) - log_eps
            # d/dx log Gamma(s, x) = -x^(s-1) e^-x / Gamma(s, x)
            slope = -mp.exp((s - 1) * mp.log(x) - x) / g - s / x
            return val, slope

        lo, hi = s, k_max + mp.mpf(200)
        while h(lo)[0] < 0:
            lo /= 2
        while h(hi)[0] > 0:
            hi *= 2
        x = mp.mpf(k_max + 35)
        if not lo < x < hi:
            x = (lo + hi) / 2
        trace = []
        tol = mp.mpf(10) ** (-(dps + GUARD_DPS // 2))
        for _ in range(max_iter):
            val, slope = h(x)
            trace.append((x, val))
            if val > 0:
                lo = x
            else:
                hi = x
            step = val / slope
            x_new = x - step
            if not lo < x_new < hi:
                x_new = (lo + hi) / 2
                log.debug("compute_x1: Newton left bracket, bisecting to %s", x_new)
            if abs(x_new - x) <= tol * x:
                x = x_new
                break
            x = x_new
        else:
            raise NewtonFailure(f"x1 solve did not converge for k_max={k_max}, eps={eps_tol}", trace)
    with mp.workdps(dps):
        return +x


def weight_rho_A(k: int, x, dps: int = DEFAULT_DPS):
    """max_{l=0..k} prod_{n=l}^{k-1} x/(n + 1/2).

    Bounds how much an error in F_k grows when recursed down to F_l.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        best = p = mp.one
        for n in range(k - 1, -1, -1):
            p *= x / (n + mp.mpf(0.5))
            if p > best:
                best = p
    with mp.workdps(dps):
        return +best


class StabilityWeight:
    """Picklable rho_{A,k} handle for the Remez engine."""

    def __init__(self, k: int, dps: int = DEFAULT_DPS):
        self.k = k
        self.dps = dps

    def __call__(self, x):
        return weight_rho_A(self.k, x, self.dps)

    def __repr__(self):
        return f"StabilityWeight(k={self.k})"
