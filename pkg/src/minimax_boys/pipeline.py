"""Table generation and verification against the series reference."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from mpmath import mp

from .evaluate import boys_bulk
from .highprec import DEFAULT_DPS
from .reference import ReferenceConfig, boys_reference, boys_reference_ladder, terms_for_bound
from .regions import StabilityWeight, compute_x0, compute_x1
from .remez.walsh import walsh_search
from .tables import CoefficientTableSet

log = logging.getLogger(__name__)


class GenerationError(RuntimeError):
    """A table could not be generated to the requested tolerance."""


class BoysOracle:
    """Picklable x -> F_k(x) at extended precision."""

    def __init__(self, k: int, L: int, dps: int = DEFAULT_DPS):
        self.k = k
        self.cfg = ReferenceConfig(L=L, dps=dps)

    def __call__(self, x):
        return boys_reference(self.k, x, self.cfg)


@dataclass
class TableReport:
    kind: str
    k: int
    n: int
    m: int
    sup_error: float
    met_tolerance: bool


@dataclass
class GenerationResult:
    tables: CoefficientTableSet
    reports: List[TableReport]


def _generate_one(job):
    kind, k, a, b, eps, dps, max_total, seed, L = job
    f = BoysOracle(k, L, dps)
    rho = None if kind == "B" else StabilityWeight(k, dps)
    w = walsh_search(f, a, b, eps, rho=rho, max_total=max_total, dps=dps, rng_seed=seed)
    r = w.approximant.to_double()
    return kind, k, r, TableReport(kind, k, w.n, w.m, float(w.sup_error), w.met_tolerance)


def generate_tables(k_max: int, eps_tol: float, dps: int = DEFAULT_DPS, max_total: int = 24,
                    workers: int = 1, seed: int = 0, margin: float = 1.0) -> GenerationResult:
    """Region boundaries, then one Walsh search per table.

    r_B approximates F_0 on [x0, x1] unweighted; r_{A,k} approximates F_k on
    [0, x0] with the downward-recursion stability weight. The searches run
    at ``margin * eps_tol``. Coefficients are rounded once to double.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    x0 = float(compute_x0(k_max, dps))
    x1 = float(compute_x1(k_max, eps_tol, dps))
    if not x0 < x1:
        raise GenerationError(f"region B is empty: x0 = {x0} >= x1 = {x1}")
    log.info("x0 = %r, x1 = %r", x0, x1)
    target = margin * eps_tol
    jobs = [("B", 0, x0, x1, target, dps, max_total, seed, terms_for_bound(0, x1))]
    jobs += [("A", k, 0.0, x0, target, dps, max_total, seed, terms_for_bound(k, x0)) for k in range(k_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_generate_one, jobs))
    else:
        results = [_generate_one(j) for j in jobs]
    reports = [rep for *_, rep in results]
    for rep in reports:
        log.info("table %s k=%d: (n, m) = (%d, %d), error %.3e%s", rep.kind, rep.k, rep.n, rep.m,
                 rep.sup_error, "" if rep.met_tolerance else " (tolerance NOT met)")
    r_B = next(r for kind, _, r, _ in results if kind == "B")
    r_A = [r for kind, _, r, _ in sorted((t for t in results if t[0] == "A"), key=lambda t: t[1])]
    return GenerationResult(CoefficientTableSet(x0, x1, k_max, eps_tol, r_B, tuple(r_A)), reports)


@dataclass
class RegionError:
    max_error: float
    x: float
    l: int


@dataclass
class VerifyReport:
    eps_tol: float
    errors: Dict[int, Dict[str, RegionError]] = field(default_factory=dict)

    @property
    def worst(self) -> float:
        return max((e.max_error for per in self.errors.values() for e in per.values()), default=0.0)

    @property
    def passed(self) -> bool:
        return self.worst <= self.eps_tol

    def failures(self):
        return [(k, reg, e) for k, per in sorted(self.errors.items()) for reg, e in per.items()
                if not e.max_error <= self.eps_tol]

    def lines(self) -> List[str]:
        out = []
        for k, per in sorted(self.errors.items()):
            cells = "  ".join(f"{reg}: {e.max_error:.3e}" for reg, e in sorted(per.items()))
            flag = "" if all(e.max_error <= self.eps_tol for e in per.values()) else "  FAIL"
            out.append(f"k={k:2d}  {cells}{flag}")
        return out


def sample_region(tables: CoefficientTableSet, region: str, count: int, rng, x_max: float = 200.0):
    lo, hi = {"A": (0.0, tables.x0), "B": (tables.x0, tables.x1), "C": (tables.x1, x_max)}[region]
    if region == "C" and not x_max > tables.x1:
        raise ValueError("x_max must exceed x1")
    xs = rng.uniform(lo, hi, count)
    if region != "C":
        # half-open regions: keep the rare hi draw out
        xs = np.where(xs >= hi, np.nextafter(hi, lo), xs)
    return xs


def reference_matrix(xs: Sequence[float], k_max: int, dps: int = DEFAULT_DPS, target: float = 1e-30):
    """Double-double (hi, lo) arrays of F_0..F_kmax at every x."""
    xs = np.asarray(xs, dtype=float)
    hi = np.empty((xs.size, k_max + 1))
    lo = np.empty_like(hi)
    if xs.size == 0:
        return hi, lo
    cfg = ReferenceConfig(L=terms_for_bound(k_max, float(xs.max()), target), dps=dps)
    with mp.workdps(dps):
        for i, x in enumerate(xs.tolist()):
            for l, v in enumerate(boys_reference_ladder(k_max, x, cfg)):
                h = float(v)
                hi[i, l] = h
                lo[i, l] = float(v - h)
    return hi, lo


def max_abs_error(values, hi, lo):
    """Largest |values - (hi + lo)| and its (row, column)."""
    err = np.abs((values - hi) - lo)
    idx = np.unravel_index(int(np.argmax(err)), err.shape)
    return float(err[idx]), idx


def verify_tables(tables: CoefficientTableSet, samples_per_region: int = 10_000, seed: int = 0,
                  regions: str = "ABC", x_max: float = 200.0, k_values: Optional[Sequence[int]] = None,
                  dps: int = DEFAULT_DPS) -> VerifyReport:
    """Max absolute deviation from the reference, per k and region, over every F_l with l <= k."""
    rng = np.random.default_rng(seed)
    ks = list(range(tables.k_max + 1)) if k_values is None else list(k_values)
    report = VerifyReport(tables.eps_tol, {k: {} for k in ks})
    for region in regions:
        xs = sample_region(tables, region, samples_per_region, rng, x_max)
        hi, lo = reference_matrix(xs, max(ks), dps)
        for k in ks:
            err, (i, l) = max_abs_error(boys_bulk(xs, k, tables), hi[:, : k + 1], lo[:, : k + 1])
            report.errors[k][region] = RegionError(err, float(xs[i]), int(l))
    return report
