"""Rational Remez exchange.

    guess nodes -> fixed-node solve -> pole-free? -(no)-> guess again
                                        |yes
                                    converged? -(yes)-> done
                                        |no
                     exchange nodes -> error target still reachable? -(no)-> Infeasible
                                        |yes
                                     next iteration
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np
from mpmath import mp

from ..highprec import DEFAULT_DPS
from .approximant import RationalApproximant
from .fixed_nodes import DegenerateNodes, select_pole_free, solve_fixed_nodes
from .golden import golden_section_search

log = logging.getLogger(__name__)


class RemezFailure(RuntimeError):
    def __init__(self, msg, trace=()):
        super().__init__(msg)
        self.trace = list(trace)


class IterationLimit(RemezFailure):
    pass


class ReguessLimit(RemezFailure):
    pass


class ProbableDefect(RemezFailure):
    """Node exchange repeatedly found fewer than n+m+2 alternating extrema."""


class NodeUpdateFailure(ArithmeticError):
    pass


class Infeasible(Exception):
    """The weighted error cannot reach ``E_tol``; ``lower_bound`` certifies it."""

    def __init__(self, lower_bound, E_tol, state):
        super().__init__(f"minimax error >= {mp.nstr(lower_bound, 6)} > E_tol = {E_tol}")
        self.lower_bound = lower_bound
        self.E_tol = E_tol
        self.state = state


class Memo:
    """Caches an extended-precision function on its (hashable) mpf arguments."""

    def __init__(self, fn):
        self.fn = fn
        self.cache = {}

    def __call__(self, x):
        try:
            return self.cache[x]
        except KeyError:
            v = self.cache[x] = self.fn(x)
            return v


def _one(x):
    return mp.one


@dataclass
class RemezProblem:
    f: Callable
    a: object
    b: object
    n: int
    m: int
    rho: Optional[Callable] = None
    eps_conv: Optional[float] = None
    eps_conv_rel: float = 1e-2
    E_tol: Optional[float] = None
    grid_K: Optional[int] = None
    rng_seed: int = 0
    dps: int = DEFAULT_DPS
    max_iter: int = 200
    max_reguess: int = 100
    max_node_failures: int = 10
    node_tol: float = 1e-10
    verbose: bool = False

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("degrees must be non-negative")
        if not self.a < self.b:
            raise ValueError("need a < b")
        if self.eps_conv is not None and self.eps_conv < 0:
            raise ValueError("eps_conv must be >= 0")
        if self.grid_K is None:
            self.grid_K = 64 * self.N
        if self.grid_K < 4 * self.N:
            raise ValueError(f"grid_K must be >= 4(n+m+2) = {4 * self.N}")
        if not isinstance(self.f, Memo):
            self.f = Memo(self.f)
        if self.rho is None:
            self.rho = _one
        elif not isinstance(self.rho, Memo):
            self.rho = Memo(self.rho)

    @property
    def N(self) -> int:
        return self.n + self.m + 2

    def interval(self):
        with mp.workdps(self.dps):
            return mp.mpf(self.a), mp.mpf(self.b)

    def grid(self):
        a, b = self.interval()
        K = self.grid_K
        with mp.workdps(self.dps):
            return [a + (b - a) * k / (K - 1) for k in range(K - 1)] + [b]


@dataclass
class RemezState:
    nodes: List
    approximant: RationalApproximant
    levelled_error: object
    iteration: int = 0
    weighted_sup_error: object = None
    extrema: List = field(default_factory=list, repr=False)


@dataclass
class RemezResult:
    approximant: RationalApproximant
    nodes: List
    sup_error: object
    levelled_error: object
    iterations: int
    reguesses: int
    trace: List = field(default_factory=list, repr=False)

    def error_signs(self, problem: RemezProblem):
        return [mp.sign(weighted_error(problem, self.approximant, x)) for x in self.nodes]


def guess_nodes(problem: RemezProblem, rng) -> list:
    """n+m+2 sorted uniform random points in [a, b]."""
    a, b = problem.interval()
    while True:
        u = np.sort(rng.uniform(0.0, 1.0, problem.N))
        if np.all(np.diff(u) > 0):
            break
    with mp.workdps(problem.dps):
        return [a + (b - a) * mp.mpf(float(t)) for t in u]


def weighted_error(problem: RemezProblem, r: RationalApproximant, x):
    with mp.workdps(problem.dps):
        return problem.rho(x) * (problem.f(x) - r(x))


def error_extrema(problem: RemezProblem, r: RationalApproximant):
    """Golden-section-refined local maxima of rho*|f - r|, as sorted (x, e) pairs.

    A grid point y_k is a candidate when sign(e_k) * e is no smaller at y_k
    than at its grid neighbours; it is then refined on its two
    neighbouring grid cells ([a, y_2] and [y_{K-1}, b] at the ends),
    maximizing sign(e_k) * e so a nearby sign change cannot capture it.
    """
    ys = problem.grid()
    es = [weighted_error(problem, r, y) for y in ys]
    K = len(ys)
    a, b = ys[0], ys[-1]
    tol = problem.node_tol * (b - a)
    out = []
    for k in range(K):
        # signed test: a neighbour across a sign change must not hide an extremum
        s = 1 if es[k] >= 0 else -1
        left = s * es[k - 1] if k > 0 else None
        right = s * es[k + 1] if k < K - 1 else None
        if (left is not None and s * es[k] < left) or (right is not None and s * es[k] <= right):
            continue
        lo, hi = (ys[k - 1] if k > 0 else a), (ys[k + 1] if k < K - 1 else b)
        i_lo, i_hi = max(k - 1, 0), min(k + 1, K - 1)

        def g(x, s=s):
            return s * weighted_error(problem, r, x)

        with mp.workdps(problem.dps):
            x, gx = golden_section_search(g, lo, hi, tol, fa=s * es[i_lo], fb=s * es[i_hi])
        if s * es[k] > gx:
            x, gx = ys[k], s * es[k]
        out.append((x, s * gx))
    out.sort(key=lambda t: t[0])
    return out


def select_alternating(extrema, levelled, N):
    """Pick N alternating extrema with |e| >= |E| that include the global maximum."""
    E = abs(levelled)
    floor = E * (1 - mp.mpf(10) ** -20)
    kept = [(x, e) for x, e in extrema if abs(e) >= floor]
    merged = []
    for x, e in kept:
        if merged and (merged[-1][1] > 0) == (e > 0):
            if abs(e) > abs(merged[-1][1]):
                merged[-1] = (x, e)
        else:
            merged.append((x, e))
    if len(merged) < N:
        raise NodeUpdateFailure(f"only {len(merged)} alternating extrema >= |E|, need {N}")
    g = max(range(len(merged)), key=lambda i: abs(merged[i][1]))
    best = None
    for start in range(max(0, g - N + 1), min(g, len(merged) - N) + 1):
        window = merged[start:start + N]
        score = min(abs(e) for _, e in window)
        if best is None or score > best[0]:
            best = (score, window)
    return [x for x, _ in best[1]]


def update_nodes(state: RemezState, problem: RemezProblem, extrema=None) -> list:
    """New nodes: local maxima of the weighted error, alternating in sign, each
    with magnitude >= |E|, one of them the global maximum."""
    if extrema is None:
        extrema = error_extrema(problem, state.approximant)
    return select_alternating(extrema, state.levelled_error, problem.N)


def _emit(problem, entry):
    if problem.verbose:
        log.info(json.dumps({k: (mp.nstr(v, 12) if isinstance(v, mp.mpf) else v) for k, v in entry.items()}))


def remez_solve(problem: RemezProblem) -> RemezResult:
    """Weighted rational minimax approximation of ``problem.f`` on [a, b].

    Raises ``Infeasible`` when the early-abort test certifies the error can
    not reach ``E_tol``, and a ``RemezFailure`` subclass when the iteration,
    re-guess or defect limits are exceeded.
    """
    rng = np.random.default_rng(problem.rng_seed)
    a, b = problem.interval()
    dps = problem.dps
    trace = []
    reguesses = 0
    node_failures = 0
    iteration = 0
    last_E = None
    nodes = guess_nodes(problem, rng)

    def reguess(reason):
        nonlocal nodes, reguesses, last_E
        reguesses += 1
        log.debug("re-guess %d: %s", reguesses, reason)
        if reguesses > problem.max_reguess:
            raise ReguessLimit(f"no pole-free solution after {problem.max_reguess} random guesses", trace)
        nodes = guess_nodes(problem, rng)
        last_E = None

    with mp.workdps(dps):
        while True:
            if iteration >= problem.max_iter:
                raise IterationLimit(f"no convergence in {problem.max_iter} iterations", trace)
            fvals = [problem.f(x) for x in nodes]
            rvals = [problem.rho(x) for x in nodes]
            try:
                cands = solve_fixed_nodes(nodes, fvals, rvals, problem.n, problem.m, dps, (a, b))
            except DegenerateNodes as exc:
                reguess(str(exc))
                continue
            chosen = select_pole_free(cands, a, b)
            if chosen is None:
                reguess("no pole-free candidate")
                continue
            r, E = chosen
            state = RemezState(nodes, r, E, iteration)
            extrema = error_extrema(problem, r)
            sup = max([abs(e) for _, e in extrema] + [mp.zero])
            state.weighted_sup_error = sup
            state.extrema = extrema
            entry = {"iteration": iteration, "E": E, "sup_error": sup,
                     "nodes": [mp.nstr(x, 10) for x in nodes]}
            trace.append(entry)
            _emit(problem, entry)

            slack = mp.mpf(10) ** (8 - dps) * max(problem.f.cache.values(), key=abs, default=1)
            slack = abs(slack)
            if abs(E) > sup + slack:
                log.warning("levelled error %s exceeds sup error %s", mp.nstr(E, 8), mp.nstr(sup, 8))
                entry["vallee_poussin_violation"] = True
            if last_E is not None and abs(E) < abs(last_E) * (1 - mp.mpf(10) ** -20):
                log.info("levelled error decreased: %s -> %s", mp.nstr(last_E, 12), mp.nstr(E, 12))
            last_E = E

            eps = problem.eps_conv if problem.eps_conv is not None else problem.eps_conv_rel * sup
            if sup - abs(E) <= max(eps, slack):
                return RemezResult(r, list(nodes), sup, E, iteration, reguesses, trace)

            try:
                new_nodes = update_nodes(state, problem, extrema)
                node_failures = 0
            except NodeUpdateFailure as exc:
                node_failures += 1
                if node_failures >= problem.max_node_failures:
                    raise ProbableDefect(
                        f"node exchange failed {node_failures} times in a row ({exc}); "
                        "the minimax approximation is probably (near-)defective", trace) from exc
                reguess(str(exc))
                iteration += 1
                continue

            if problem.E_tol is not None:
                bound = min(abs(weighted_error(problem, r, x)) for x in new_nodes)
                if bound > problem.E_tol:
                    raise Infeasible(bound, problem.E_tol, state)
            nodes = new_nodes
            iteration += 1
