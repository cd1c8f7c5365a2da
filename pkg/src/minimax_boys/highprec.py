"""Extended-precision scalar kernels.

Values are ``mpmath.mpf`` instances. Every kernel takes a ``dps`` (decimal
digits) argument and works ``GUARD_DPS`` digits above it before rounding the
result back, so callers never have to touch the global mpmath context.
"""

from __future__ import annotations

from mpmath import mp, mpf

DEFAULT_DPS = 50
GUARD_DPS = 10
ERFC_SWITCH = 2

HPReal = mpf


def hp(value, dps: int = DEFAULT_DPS) -> mpf:
    """Convert ``value`` (float, int, str or mpf) to an HPReal at ``dps`` digits.

    Doubles convert exactly.
    """
    with mp.workdps(dps):
        return mp.mpf(value)


def _finite(x):
    if not mp.isfinite(x):
        raise ValueError(f"non-finite argument: {x}")


def hp_exp(x, dps: int = DEFAULT_DPS) -> mpf:
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        _finite(x)
        y = mp.exp(x)
    with mp.workdps(dps):
        return +y


def hp_gamma_half(k: int, dps: int = DEFAULT_DPS) -> mpf:
    """Gamma(k + 1/2) by the half-integer recurrence from sqrt(pi)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    with mp.workdps(dps + GUARD_DPS):
        g = mp.sqrt(mp.pi)
        for j in range(k):
            g *= j + mp.mpf(0.5)
    with mp.workdps(dps):
        return +g


def _erf_series(x):
    # erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (1*3*...*(2n+1)); all terms positive
    x2 = 2 * x * x
    term = x
    total = x
    eps = mp.eps
    n = 0
    while True:
        n += 1
        term = term * x2 / (2 * n + 1)
        total += term
        if term < eps * total:
            break
    return 2 / mp.sqrt(mp.pi) * mp.exp(-x * x) * total


def _erfc_contfrac(x):
    # Even contraction of the Laplace continued fraction, modified Lentz.
    z = 2 * x * x
    tiny = mp.mpf(2) ** (-2 * mp.prec)
    eps = mp.eps
    f = z + 1
    c = f
    d = mp.zero
    n = 1
    while True:
        a = -(2 * n - 1) * (2 * n)
        b = z + 4 * n + 1
        d = b + a * d
        if d == 0:
            d = tiny
        c = b + a / c
        if c == 0:
            c = tiny
        d = 1 / d
        delta = c * d
        f *= delta
        n += 1
        if abs(delta - 1) < eps:
            break
    return mp.exp(-x * x) / mp.sqrt(mp.pi) * 2 * x / f


def hp_erf(x, dps: int = DEFAULT_DPS) -> mpf:
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        if x < 0:
            raise ValueError("only x >= 0 is supported")
        if x < ERFC_SWITCH:
            y = _erf_series(x) if x > 0 else mp.zero
        else:
            y = 1 - _erfc_contfrac(x)
    with mp.workdps(dps):
        return +y


def hp_erfc(x, dps: int = DEFAULT_DPS) -> mpf:
    """Complementary error function for x >= 0.

    Power series of erf below ``ERFC_SWITCH``, continued fraction above it.
    """
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        if x < 0:
            raise ValueError("only x >= 0 is supported")
        if x < ERFC_SWITCH:
            y = 1 - _erf_series(x) if x > 0 else mp.one
        else:
            y = _erfc_contfrac(x)
    with mp.workdps(dps):
        return +y


def hp_upper_incomplete_gamma_half(k: int, x, dps: int = DEFAULT_DPS) -> mpf:
    """Gamma(k + 1/2, x) via Gamma(s+1, x) = s Gamma(s, x) + x^s e^-x."""
    if k < 0:
        raise ValueError("k must be non-negative")
    with mp.workdps(dps + GUARD_DPS):
        x = mp.mpf(x)
        if x < 0:
            raise ValueError("upper incomplete gamma needs x >= 0")
        # 2*GUARD keeps the relative error in budget when erfc underflows many digits
        g = mp.sqrt(mp.pi) * hp_erfc(mp.sqrt(x), dps + 2 * GUARD_DPS)
        if k:
            ex = mp.exp(-x)
            s = mp.mpf(0.5)
            xs = mp.sqrt(x)
            for _ in range(k):
                g = s * g + xs * ex
                s += 1
                xs *= x
    with mp.workdps(dps):
        return +g
