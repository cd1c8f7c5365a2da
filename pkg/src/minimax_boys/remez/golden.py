from __future__ import annotations

import math

INVPHI = (math.sqrt(5) - 1) / 2


def golden_section_max(g, a, b, tol):
    """Argmax of a unimodal ``g`` on [a, b], to within ``tol``.

    Works with floats or mpf. The endpoints compete with the bracketed
    maximum, so a monotone ``g`` returns the right endpoint.
    """
    return golden_section_search(g, a, b, tol)[0]


def golden_section_search(g, a, b, tol, fa=None, fb=None):
    """Like golden_section_max but returns ``(x, g(x))``; ``fa``/``fb`` are known endpoint values."""
    if b < a:
        raise ValueError("golden_section_max needs a <= b")
    if not tol > 0:
        raise ValueError("tol must be positive")
    lo, hi = a, b
    x1 = hi - INVPHI * (hi - lo)
    x2 = lo + INVPHI * (hi - lo)
    g1, g2 = g(x1), g(x2)
    while hi - lo > tol:
        if g1 < g2:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + INVPHI * (hi - lo)
            g2 = g(x2)
        else:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - INVPHI * (hi - lo)
            g1 = g(x1)
    best, gbest = (x1, g1) if g1 >= g2 else (x2, g2)
    fa = g(a) if fa is None else fa
    fb = g(b) if fb is None else fb
    if fa > gbest:
        best, gbest = a, fa
    if fb > gbest:
        best, gbest = b, fb
    return best, gbest
