"""Double-precision Boys functions F_0..F_k from the three-region dispatch.

    x <  x0:       F_k = r_{A,k}(x), then downward to F_0
    x0 <= x < x1:  F_0 = r_B(x), then upward to F_k
    x >= x1:       F_0 = sqrt(pi)/(2 sqrt(x)), then F_{l+1} = (2l+1)/(2x) F_l

The scalar path (``boys_batch``) and the array path (``boys_bulk``) perform
the same floating-point operations in the same order and agree bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .remez.approximant import RationalApproximant, horner
from .tables import CoefficientTableSet, embedded_default

HALF_SQRT_PI = math.sqrt(math.pi) / 2


class BoysDomainError(ValueError):
    pass


@dataclass(frozen=True)
class BoysBatch:
    values: Tuple[float, ...]
    x: float
    k: int
    region: str

    def __len__(self):
        return len(self.values)

    def __getitem__(self, l):
        return self.values[l]


def eval_rational(approx: RationalApproximant, x: float) -> float:
    return horner(approx.numer, x) / horner(approx.denom, x)


def downward_recursion(seed: float, x: float, k: int, ex: Optional[float] = None) -> list:
    """F_l = (2x F_{l+1} + e^-x) / (2l+1) for l = k-1..0, starting from F_k = seed."""
    if ex is None:
        ex = math.exp(-x)
    out = [0.0] * (k + 1)
    out[k] = f = seed
    x2 = 2.0 * x
    for l in range(k - 1, -1, -1):
        f = (x2 * f + ex) / (2 * l + 1)
        out[l] = f
    return out


def upward_recursion(seed: float, x: float, k: int, ex: Optional[float] = None) -> list:
    """F_{l+1} = ((2l+1) F_l - e^-x) / (2x) for l = 0..k-1, starting from F_0 = seed.

    ``ex = 0.0`` gives the pure multiplicative chain used for large x.
    """
    if not x > 0:
        raise BoysDomainError("upward recursion needs x > 0")
    if ex is None:
        ex = math.exp(-x)
    out = [0.0] * (k + 1)
    out[0] = f = seed
    x2 = 2.0 * x
    for l in range(k):
        f = ((2 * l + 1) * f - ex) / x2
        out[l + 1] = f
    return out


def _check(k, tables: CoefficientTableSet):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise BoysDomainError(f"k must be an integer, got {k!r}")
    if not 0 <= k <= tables.k_max:
        raise BoysDomainError(f"k = {k} outside 0..{tables.k_max} covered by the tables")


def evaluate_branch(region: str, x: float, k: int, tables: CoefficientTableSet) -> list:
    """F_0..F_k at x by one region's formula, regardless of where x falls."""
    if region == "A":
        return downward_recursion(eval_rational(tables.r_A[k], x), x, k)
    if region == "B":
        return upward_recursion(eval_rational(tables.r_B, x), x, k)
    if region == "C":
        return upward_recursion(HALF_SQRT_PI / math.sqrt(x), x, k, 0.0)
    raise ValueError(f"unknown region {region!r}")


def boys_batch(x: float, k: int, tables: Optional[CoefficientTableSet] = None) -> BoysBatch:
    tables = embedded_default() if tables is None else tables
    _check(k, tables)
    x = float(x)
    if not (math.isfinite(x) and x >= 0):
        raise BoysDomainError(f"x must be finite and >= 0, got {x!r}")
    region = "A" if x < tables.x0 else "B" if x < tables.x1 else "C"
    return BoysBatch(tuple(evaluate_branch(region, x, k, tables)), x, k, region)


def _horner_vec(coeffs, x):
    acc = np.full_like(x, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def boys_bulk(xs, k: int, tables: Optional[CoefficientTableSet] = None) -> np.ndarray:
    """F_0..F_k for every x in ``xs``; returns an array of shape (len(xs), k+1)."""
    tables = embedded_default() if tables is None else tables
    _check(k, tables)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    if xs.ndim != 1:
        raise BoysDomainError("xs must be one-dimensional")
    if not (np.all(np.isfinite(xs)) and np.all(xs >= 0)):
        raise BoysDomainError("every x must be finite and >= 0")
    out = np.empty((xs.size, k + 1))
    a = xs < tables.x0
    c = xs >= tables.x1
    b = ~(a | c)
    # math.exp keeps results identical to the scalar path
    ex = np.array([math.exp(-v) for v in xs.tolist()])

    if a.any():
        x, e = xs[a], ex[a]
        f = _horner_vec(tables.r_A[k].numer, x) / _horner_vec(tables.r_A[k].denom, x)
        blk = np.empty((x.size, k + 1))
        blk[:, k] = f
        x2 = 2.0 * x
        for l in range(k - 1, -1, -1):
            f = (x2 * f + e) / (2 * l + 1)
            blk[:, l] = f
        out[a] = blk
    for mask, seed_fn, use_exp in (
        (b, lambda x: _horner_vec(tables.r_B.numer, x) / _horner_vec(tables.r_B.denom, x), True),
        (c, lambda x: HALF_SQRT_PI / np.sqrt(x), False),
    ):
        if not mask.any():
            continue
        x = xs[mask]
        e = ex[mask] if use_exp else np.zeros_like(x)
        f = seed_fn(x)
        blk = np.empty((x.size, k + 1))
        blk[:, 0] = f
        x2 = 2.0 * x
        for l in range(k):
            f = ((2 * l + 1) * f - e) / x2
            blk[:, l + 1] = f
        out[mask] = blk
    return out
