"""Cyclic Jacobi diagonalization of a small real symmetric matrix in mpmath precision."""

from __future__ import annotations

from mpmath import mp


def jacobi_eigh(a, max_sweeps: int = 100):
    """Eigen-decomposition of symmetric ``a`` (list of lists of mpf).

    Returns ``(eigenvalues, vectors)`` where ``vectors[j]`` is the unit
    eigenvector for ``eigenvalues[j]``; eigenvalues are sorted ascending.
    """
    n = len(a)
    a = [[mp.mpf(v) for v in row] for row in a]
    v = [[mp.one if i == j else mp.zero for j in range(n)] for i in range(n)]
    scale = max((abs(a[i][j]) for i in range(n) for j in range(n)), default=mp.zero)
    tol = mp.eps * (scale if scale else mp.one)
    for _ in range(max_sweeps):
        off = max((abs(a[i][j]) for i in range(n) for j in range(i + 1, n)), default=mp.zero)
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) <= tol * mp.eps:
                    continue
                theta = (a[q][q] - a[p][p]) / (2 * apq)
                t = mp.sign(theta) / (abs(theta) + mp.sqrt(theta * theta + 1)) if theta else mp.one
                c = 1 / mp.sqrt(t * t + 1)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    order = sorted(range(n), key=lambda j: a[j][j])
    return [a[j][j] for j in order], [[v[i][j] for i in range(n)] for j in order]
