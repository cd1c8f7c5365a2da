"""Distinct-real-root counting with Sturm sequences.

Coefficients (mpf and float are binary rationals) are scaled exactly to
integers. The remainder sequence is a primitive pseudo-remainder sequence
with positive multipliers, so every member is a positive multiple of the
classical Sturm polynomial and sign counts are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence

from mpmath import mp


def to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, float)):
        return Fraction(v)
    v = mp.mpf(v)
    if not mp.isfinite(v):
        raise ValueError(f"non-finite coefficient {v}")
    sign, man, exp, _ = v._mpf_
    man = -int(man) if sign else int(man)
    return Fraction(man * 2 ** exp) if exp >= 0 else Fraction(man, 2 ** -exp)


def _trim(p: List[int]) -> List[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: List[int]) -> List[int]:
    g = 0
    for c in p:
        g = gcd(g, c)
    return [c // g for c in p] if g > 1 else p


def _integer_poly(poly: Sequence) -> List[int]:
    fr = [to_fraction(c) for c in poly]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    return _trim([int(c * den) for c in fr])


def _prem(a: List[int], b: List[int]) -> List[int]:
    """|lc(b)|^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    alead = abs(lead)
    sgn = 1 if lead > 0 else -1
    while len(a) - 1 >= db and any(a):
        top = a[-1]
        shift = len(a) - 1 - db
        # a <- |lc b| * a - sgn(lc b) * top * x^shift * b
        a = [alead * c for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= sgn * top * c
        a.pop()
        if not a:
            a = [0]
    return _trim(a)


def _exact_quotient(a: List[int], b: List[int]) -> List[int]:
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        q[i] = a[i + len(b) - 1] / b[-1]
        for j, c in enumerate(b):
            a[i + j] -= q[i] * c
    return _primitive(_integer_poly(q))


def _chain(p: List[int]) -> List[List[int]]:
    seq = [p]
    if len(p) == 1:
        return seq
    seq.append(_primitive(_trim([i * c for i, c in enumerate(p)][1:])))
    while len(seq[-1]) > 1:
        r = _prem(seq[-2], seq[-1])
        if len(r) == 1 and r[0] == 0:
            break
        seq.append(_primitive([-c for c in r]))
    return seq


def sturm_sequence(poly: Sequence) -> List[List[int]]:
    """Sturm sequence of the square-free part of ``poly``, as integer polynomials.

    Each member is a positive multiple of the classical one. Dropping repeated
    factors keeps the count valid when an endpoint is a multiple root.
    """
    p = _primitive(_integer_poly(poly))
    if len(p) == 1 and p[0] == 0:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = _chain(p)
    g = seq[-1]
    if len(g) > 1:
        seq = _chain(_exact_quotient(p, g))
    return seq


def _sign_at(p: List[int], x: Fraction) -> int:
    # den^deg * p(num/den), den > 0
    num, den = x.numerator, x.denominator
    d = len(p) - 1
    v = 0
    for i, c in enumerate(p):
        v += c * num ** i * den ** (d - i)
    return (v > 0) - (v < 0)


def _sign_changes(seq, x: Fraction) -> int:
    changes = 0
    last = 0
    for p in seq:
        s = _sign_at(p, x)
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def sturm_root_count(poly: Sequence, a, b) -> int:
    """Number of distinct real roots of ``poly`` (ascending coefficients) in (a, b]."""
    a, b = to_fraction(a), to_fraction(b)
    if a > b:
        raise ValueError("empty interval")
    seq = sturm_sequence(poly)
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def has_root_in_closed(poly: Sequence, a, b) -> bool:
    """True when ``poly`` vanishes somewhere in [a, b]."""
    if _sign_at(_integer_poly(poly), to_fraction(a)) == 0:
        return True
    return sturm_root_count(poly, a, b) > 0
