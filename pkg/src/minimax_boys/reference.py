"""Extended-precision Boys function values from the positive-term series

    F_k(x) = e^-x / 2 * sum_{l=0}^{L} x^l / prod_{j=0}^{l} (k + j + 1/2)

together with the bound on its relative truncation error.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .highprec import DEFAULT_DPS, GUARD_DPS, hp_gamma_half

DEFAULT_TERMS = 150


@dataclass(frozen=True)
class ReferenceConfig:
    L: int = DEFAULT_TERMS
    dps: int = DEFAULT_DPS

    def __post_init__(self):
        if self.L < 1:
            raise ValueError("series truncation index L must be >= 1")


def _check(k, x):
    if k < 0:
        raise ValueError(f"Boys order must be non-negative, got {k}")
    if not mp.isfinite(x) or x < 0:
        raise ValueError(f"Boys argument must be finite and non-negative, got {x}")


def _series_sum(k, x, L, bits):
    """sum_{l<=L} x^l / prod_{j<=l}(k+j+1/2) in fixed point with ``bits`` fraction bits.

    Every term is positive, so truncating each term to the fixed-point grid
    costs at most L ulps absolute against a sum >= 1/(k+1/2).
    """
    X = int(mp.ldexp(x, bits))
    t = (2 << bits) // (2 * k + 1)
    s = t
    for l in range(1, L + 1):
        t = ((t * X) >> bits) * 2 // (2 * k + 2 * l + 1)
        if not t:
            break
        s += t
    return mp.ldexp(mp.mpf(s), -bits)


def boys_reference(k: int, x, cfg: ReferenceConfig = ReferenceConfig()):
    """F_k(x) to within truncation_bound(k, x, cfg.L) plus rounding."""
    with mp.workdps(cfg.dps + GUARD_DPS):
        x = mp.mpf(x)
        _check(k, x)
        bits = mp.prec + 16
        value = mp.exp(-x) / 2 * _series_sum(k, x, cfg.L, bits)
    with mp.workdps(cfg.dps):
        return +value


def boys_reference_ladder(kmax: int, x, cfg: ReferenceConfig = ReferenceConfig()):
    """[F_0(x), ..., F_kmax(x)]: series at kmax, then downward recursion.

    Downward recursion only adds positive quantities, so it keeps the
    relative accuracy of the seed.
    """
    with mp.workdps(cfg.dps + GUARD_DPS):
        x = mp.mpf(x)
        _check(kmax, x)
        bits = mp.prec + 16
        ex = mp.exp(-x)
        out = [None] * (kmax + 1)
        f = ex / 2 * _series_sum(kmax, x, cfg.L, bits)
        out[kmax] = f
        x2 = 2 * x
        for l in range(kmax - 1, -1, -1):
            f = (x2 * f + ex) / (2 * l + 1)
            out[l] = f
    with mp.workdps(cfg.dps):
        return [+v for v in out]


def truncation_bound(k: int, x, L: int, dps: int = DEFAULT_DPS):
    """x^(k+L+3/2) / Gamma(k+L+3/2): relative error of the L-term series."""
    if k < 0 or L < 0:
        raise ValueError("k and L must be non-negative")
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        if x < 0:
            raise ValueError("x must be non-negative")
        if x == 0:
            return mp.zero
        bound = x ** (k + L + 1) * mp.sqrt(x) / hp_gamma_half(k + L + 1, dps + GUARD_DPS)
    with mp.workdps(dps):
        return +bound


def terms_for_bound(k: int, x, target=1e-30, minimum: int = DEFAULT_TERMS) -> int:
    """Smallest L >= ``minimum`` whose truncation bound at (k, x) is <= ``target``."""
    with mp.workdps(30):
        x = mp.mpf(x)
        target = mp.mpf(target)
        if x == 0:
            return minimum
        # log of the bound, updated incrementally in L
        L = minimum
        logb = (k + L + 1.5) * mp.log(x) - mp.loggamma(k + L + 1.5)
        logt = mp.log(target)
        while logb > logt:
            L += 1
            logb += mp.log(x) - mp.log(k + L + 0.5)
        return L


def reference_config_for(k: int, x, target=1e-30, dps: int = DEFAULT_DPS) -> ReferenceConfig:
    return ReferenceConfig(L=terms_for_bound(k, x, target), dps=dps)
