"""Fixed-node stage of the exchange: rational interpolation with levelled error on fixed nodes.

For nodes x_0 < ... < x_{N-1}, N = n + m + 2, we want r = p/q and E with

    rho_i (f_i - p(x_i)/q(x_i)) = (-1)^i E.

Equivalently p(x_i) = q(x_i) (f_i - (-1)^i E / rho_i). The functionals
g -> sum_i w_i phi(x_i) g_i with w_i = 1/prod_{j!=i}(x_i - x_j) and
deg phi <= m annihilate every p of degree <= n, which leaves

    sum_i w_i f_i phi q(x_i) = E sum_i w_i (-1)^i / rho_i phi q(x_i).

The w_i alternate in sign, so w_i (-1)^i / rho_i = s |w_i| / rho_i with a
fixed s = (-1)^(N-1). Writing q in a basis orthonormal for the weights
|w_i| / rho_i makes the right-hand side s*I and the whole system a symmetric
eigenproblem; every eigenpair yields one candidate (r, E).
"""

from __future__ import annotations

import logging

from mpmath import mp

from ..highprec import DEFAULT_DPS, GUARD_DPS
from .approximant import RationalApproximant, horner, make_monic
from .jacobi import jacobi_eigh
from .sturm import has_root_in_closed

log = logging.getLogger(__name__)


class DegenerateNodes(ArithmeticError):
    """Node configuration makes the interpolation numerically singular."""


def _orthonormal_basis(nodes, weights, size):
    """Values and ascending monomial coefficients of ``size`` polynomials orthonormal
    under sum_i weights_i u(x_i) v(x_i), built by Arnoldi with re-orthogonalization."""
    N = len(nodes)
    vals, coefs = [], []
    for j in range(size):
        if j == 0:
            v = [mp.one] * N
            c = [mp.one]
        else:
            v = [x * u for x, u in zip(nodes, vals[-1])]
            c = [mp.zero] + list(coefs[-1])
        ref = mp.sqrt(mp.fsum(w * u * u for w, u in zip(weights, v)))
        for _ in range(2):
            for pv, pc in zip(vals, coefs):
                h = mp.fsum(w * a * b for w, a, b in zip(weights, v, pv))
                v = [a - h * b for a, b in zip(v, pv)]
                c = [a - h * (pc[i] if i < len(pc) else 0) for i, a in enumerate(c)]
        norm = mp.sqrt(mp.fsum(w * u * u for w, u in zip(weights, v)))
        if not norm > ref * mp.mpf(10) ** (-mp.dps // 2):
            raise DegenerateNodes(f"basis polynomial {j} collapsed on the node set")
        vals.append([u / norm for u in v])
        coefs.append([a / norm for a in c])
    return vals, coefs


def _strip_defect(qc, x):
    """Drop leading denominator coefficients that are rounding noise on the node range."""
    R = max(mp.one, max(abs(v) for v in x))
    size = max(abs(c) * R ** t for t, c in enumerate(qc))
    floor = size * mp.mpf(10) ** (GUARD_DPS - mp.dps)
    qc = list(qc)
    while len(qc) > 1 and abs(qc[-1]) * R ** (len(qc) - 1) <= floor:
        qc.pop()
    return qc


def solve_fixed_nodes(nodes, fvals, rhovals, n: int, m: int, dps: int = DEFAULT_DPS, domain=None):
    """All candidate (approximant, E) pairs for the fixed-node equation.

    Candidates whose node residual exceeds 10^(8-dps) relative to max(|E|, 10^-dps |rho f|)
    are dropped. Raises DegenerateNodes for coincident or collapsing nodes.
    """
    N = len(nodes)
    if N != n + m + 2:
        raise ValueError(f"need n+m+2 = {n + m + 2} nodes, got {N}")
    with mp.workdps(dps + 2 * GUARD_DPS):
        x = [mp.mpf(v) for v in nodes]
        f = [mp.mpf(v) for v in fvals]
        rho = [mp.mpf(v) for v in rhovals]
        if any(b <= a for a, b in zip(x, x[1:])):
            raise DegenerateNodes("nodes are not strictly increasing")

        w = []
        for i, xi in enumerate(x):
            prod = mp.one
            for j, xj in enumerate(x):
                if j != i:
                    prod *= xi - xj
            w.append(1 / prod)
        wmax = max(abs(v) for v in w)
        w = [v / wmax for v in w]
        d = [abs(wi) / ri for wi, ri in zip(w, rho)]
        sigma = -1 if (N - 1) % 2 else 1

        qvals, qcoefs = _orthonormal_basis(x, d, m + 1)
        A = [
            [mp.fsum(wi * fi * a * b for wi, fi, a, b in zip(w, f, qvals[j], qvals[l])) for l in range(m + 1)]
            for j in range(m + 1)
        ]
        lams, vecs = jacobi_eigh(A)

        # p is recovered by projection onto an orthonormal basis of P_n over all nodes
        pvals_basis, pcoefs_basis = _orthonormal_basis(x, [mp.one] * N, n + 1)
        fscale = max(abs(ri * fi) for ri, fi in zip(rho, f))
        signs = [1 if i % 2 == 0 else -1 for i in range(N)]
        noise = mp.mpf(10) ** (8 - mp.dps) * fscale

        out = []
        for lam, c in zip(lams, vecs):
            E = sigma * lam
            qv = [mp.fsum(c[j] * qvals[j][i] for j in range(m + 1)) for i in range(N)]
            qc = [mp.fsum(c[j] * qcoefs[j][t] for j in range(t, m + 1)) for t in range(m + 1)]
            pv = [qi * (fi - s * E / ri) for qi, fi, s, ri in zip(qv, f, signs, rho)]
            h = [mp.fsum(a * b for a, b in zip(pvals_basis[j], pv)) for j in range(n + 1)]
            pc = [mp.fsum(h[j] * pcoefs_basis[j][t] for j in range(t, n + 1)) for t in range(n + 1)]
            qc = _strip_defect(qc, x)
            try:
                r = make_monic(pc, qc, domain)
                resid = max(
                    abs(ri * (fi - r(xi)) - s * E) for xi, fi, ri, s in zip(x, f, rho, signs)
                )
            except ZeroDivisionError:
                log.debug("dropping candidate E=%s: denominator vanishes", mp.nstr(E, 8))
                continue
            tol = max(mp.mpf(10) ** (8 - dps) * abs(E), noise)
            if not resid <= tol:
                log.debug("dropping candidate E=%s: residual %s", mp.nstr(E, 8), mp.nstr(resid, 5))
                continue
            out.append((r, E))
    with mp.workdps(dps):
        return [
            (RationalApproximant(tuple(+c for c in r.numer), tuple(+c for c in r.denom), r.domain), +E)
            for r, E in out
        ]


def select_pole_free(candidates, a, b):
    """The candidate whose denominator has no root in [a, b], or None.

    At most one such candidate exists in exact arithmetic; should rounding
    let several through, the one with the smallest |E| wins.
    """
    survivors = []
    for r, E in candidates:
        # cheap sign-change screen before the exact Sturm count
        qa, qb = horner(r.denom, a), horner(r.denom, b)
        if qa == 0 or qb == 0 or (qa > 0) != (qb > 0):
            continue
        if has_root_in_closed(r.denom, a, b):
            continue
        survivors.append((r, E))
    if not survivors:
        return None
    if len(survivors) > 1:
        log.warning("%d pole-free candidates on [%s, %s]; keeping smallest |E|", len(survivors), a, b)
    return min(survivors, key=lambda t: abs(t[1]))
