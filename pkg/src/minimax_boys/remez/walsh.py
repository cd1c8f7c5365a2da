"""Search the Walsh table of (n, m) degree pairs for the cheapest approximant meeting a tolerance."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from mpmath import mp

from .exchange import Infeasible, Memo, RemezFailure, RemezProblem, RemezResult, remez_solve

log = logging.getLogger(__name__)


class WalshExhausted(RemezFailure):
    """No cell up to the total-degree limit produced any pole-free approximant."""


@dataclass
class WalshCell:
    n: int
    m: int
    status: str  # "ok", "infeasible" or "failed"
    error: Optional[object] = None
    detail: str = ""


@dataclass
class WalshResult:
    n: int
    m: int
    result: RemezResult
    met_tolerance: bool
    cells: List[WalshCell] = field(default_factory=list, repr=False)

    @property
    def approximant(self):
        return self.result.approximant

    @property
    def sup_error(self):
        return self.result.sup_error


def walsh_search(f, a, b, eps_tol, rho=None, max_total: int = 24, **problem_kwargs) -> WalshResult:
    """Scan anti-diagonals n+m = 0, 1, ..., ``max_total``.

    Each cell is run with ``E_tol = eps_tol`` so hopeless cells abort early.
    On the first diagonal where some cell reaches ``eps_tol`` the cell with the
    smallest sup error is returned. If none ever does, the smallest-error
    approximant seen (converged or aborted early) comes back with
    ``met_tolerance`` false.
    """
    f = f if isinstance(f, Memo) else Memo(f)
    rho = rho if rho is None or isinstance(rho, Memo) else Memo(rho)
    cells: List[WalshCell] = []
    best_any = None
    for D in range(max_total + 1):
        hits = []
        for n in range(D, -1, -1):
            m = D - n
            prob = RemezProblem(f=f, a=a, b=b, n=n, m=m, rho=rho, E_tol=eps_tol, **problem_kwargs)
            try:
                res = remez_solve(prob)
            except Infeasible as exc:
                cells.append(WalshCell(n, m, "infeasible", exc.lower_bound))
                log.debug("(%d,%d) infeasible, error >= %s", n, m, mp.nstr(exc.lower_bound, 5))
                # the aborted iterate still counts as a fallback candidate
                st = exc.state
                partial = RemezResult(st.approximant, list(st.nodes), st.weighted_sup_error,
                                      st.levelled_error, st.iteration, 0)
                if best_any is None or partial.sup_error < best_any[2].sup_error:
                    best_any = (n, m, partial)
                continue
            except RemezFailure as exc:
                cells.append(WalshCell(n, m, "failed", None, str(exc)))
                log.warning("(%d,%d) skipped: %s", n, m, exc)
                continue
            cells.append(WalshCell(n, m, "ok", res.sup_error))
            if best_any is None or res.sup_error < best_any[2].sup_error:
                best_any = (n, m, res)
            if res.sup_error <= eps_tol:
                hits.append((n, m, res))
        if hits:
            n, m, res = min(hits, key=lambda t: t[2].sup_error)
            return WalshResult(n, m, res, True, cells)
    if best_any is None:
        raise WalshExhausted(f"no (n, m) with n+m <= {max_total} produced an approximant")
    n, m, res = best_any
    log.warning("tolerance %g not met up to n+m = %d; best (%d,%d) error %s",
                eps_tol, max_total, n, m, mp.nstr(res.sup_error, 5))
    return WalshResult(n, m, res, False, cells)
