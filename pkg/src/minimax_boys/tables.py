"""Deployable coefficient sets and their line-oriented text format.

    # comment
    boys-minimax v1 kmax=<int> eps=<double> x0=<double> x1=<double>
    table B k=0 n=<int> m=<int>
    <n+1 numerator coefficients, ascending degree, one per line>
    <m+1 denominator coefficients, the last exactly 1>
    table A k=0 n=<int> m=<int>
    ...

One B table (F_0 on [x0, x1)) and one A table per k = 0..kmax (F_k on [0, x0)).
"""

from __future__ import annotations

import hashlib
import math
import re
import struct
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import List, Tuple

from .regions import RegionPartition
from .remez.approximant import RationalApproximant

FORMAT_TAG = "boys-minimax v1"

_HEADER = re.compile(
    r"^boys-minimax v1 kmax=(?P<kmax>\S+) eps=(?P<eps>\S+) x0=(?P<x0>\S+) x1=(?P<x1>\S+)$"
)
_TABLE = re.compile(r"^table (?P<kind>[AB]) k=(?P<k>\d+) n=(?P<n>\d+) m=(?P<m>\d+)$")


class TableFormatError(ValueError):
    """Parse failure. ``kind`` is one of: header, table-line, count, number, non-finite,
    non-monic, structure."""

    def __init__(self, kind: str, line: int, message: str):
        super().__init__(f"line {line}: {kind}: {message}")
        self.kind = kind
        self.line = line


@dataclass(frozen=True)
class CoefficientTableSet:
    x0: float
    x1: float
    k_max: int
    eps_tol: float
    r_B: RationalApproximant
    r_A: Tuple[RationalApproximant, ...]

    def __post_init__(self):
        object.__setattr__(self, "r_A", tuple(self.r_A))
        if self.k_max < 0:
            raise ValueError("k_max must be >= 0")
        if len(self.r_A) != self.k_max + 1:
            raise ValueError(f"expected {self.k_max + 1} region-A tables, got {len(self.r_A)}")
        if not 0 <= self.x0 < self.x1:
            raise ValueError(f"need 0 <= x0 < x1, got {self.x0}, {self.x1}")
        for r in (self.r_B, *self.r_A):
            for c in r.numer + r.denom:
                if not isinstance(c, float) or not math.isfinite(c):
                    raise ValueError(f"coefficient {c!r} is not a finite double")
            if r.denom[-1] != 1.0:
                raise ValueError("denominator is not monic")

    def partition(self) -> RegionPartition:
        return RegionPartition(self.x0, self.x1, self.k_max, self.eps_tol)

    def doubles(self) -> List[float]:
        out = [float(self.k_max), self.eps_tol, self.x0, self.x1]
        for r in (self.r_B, *self.r_A):
            out += [float(r.n), float(r.m), *r.numer, *r.denom]
        return out

    def fingerprint(self) -> str:
        """SHA-256 over the little-endian bytes of every stored number, in file order."""
        data = b"".join(struct.pack("<d", v) for v in self.doubles())
        return hashlib.sha256(data).hexdigest()


def _fmt(v: float) -> str:
    return f"{v:.16E}"


def emit_tables(ts: CoefficientTableSet) -> str:
    lines = [f"{FORMAT_TAG} kmax={ts.k_max} eps={ts.eps_tol!r} x0={ts.x0!r} x1={ts.x1!r}"]
    for kind, k, r in [("B", 0, ts.r_B)] + [("A", k, r) for k, r in enumerate(ts.r_A)]:
        lines.append(f"table {kind} k={k} n={r.n} m={r.m}")
        lines += [_fmt(c) for c in r.numer + r.denom]
    return "\n".join(lines) + "\n"


def _number(tok: str, line: int, what: str) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise TableFormatError("number", line, f"cannot read {what} {tok!r}") from None
    if not math.isfinite(v):
        raise TableFormatError("non-finite", line, f"{what} is {tok}")
    return v


def parse_tables(text: str) -> CoefficientTableSet:
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((no, body))
    if not rows:
        raise TableFormatError("header", 1, "empty input")

    no, head = rows[0]
    mh = _HEADER.match(head)
    if not mh:
        raise TableFormatError("header", no, f"expected '{FORMAT_TAG} kmax=.. eps=.. x0=.. x1=..'")
    try:
        kmax = int(mh["kmax"])
    except ValueError:
        raise TableFormatError("header", no, f"kmax {mh['kmax']!r} is not an integer") from None
    if kmax < 0:
        raise TableFormatError("header", no, "kmax must be >= 0")
    eps, x0, x1 = (_number(mh[key], no, key) for key in ("eps", "x0", "x1"))
    if not (eps > 0 and 0 <= x0 < x1):
        raise TableFormatError("header", no, "need eps > 0 and 0 <= x0 < x1")

    r_B = None
    r_A = {}
    i = 1
    while i < len(rows):
        no, body = rows[i]
        mt = _TABLE.match(body)
        if not mt:
            raise TableFormatError("table-line", no, f"expected 'table <A|B> k=.. n=.. m=..', got {body!r}")
        kind, k, n, m = mt["kind"], int(mt["k"]), int(mt["n"]), int(mt["m"])
        count = n + m + 2
        coeffs = []
        j = i + 1
        while j < len(rows) and len(coeffs) < count and not rows[j][1].startswith("table"):
            coeffs.append((rows[j][0], _number(rows[j][1], rows[j][0], "coefficient")))
            j += 1
        if len(coeffs) < count:
            at = rows[j][0] if j < len(rows) else rows[-1][0]
            raise TableFormatError(
                "count", at, f"table {kind} k={k} needs {count} coefficients, found {len(coeffs)}")
        if j < len(rows) and not rows[j][1].startswith("table"):
            raise TableFormatError(
                "count", rows[j][0], f"table {kind} k={k} has more than {count} coefficients")
        lead_no, lead = coeffs[-1]
        if lead != 1.0:
            raise TableFormatError("non-monic", lead_no, f"denominator leading coefficient is {lead!r}, not 1")
        vals = [v for _, v in coeffs]
        r = RationalApproximant(tuple(vals[: n + 1]), tuple(vals[n + 1:]))
        if kind == "B":
            if k != 0:
                raise TableFormatError("structure", no, "the B table approximates F_0 and must have k=0")
            if r_B is not None:
                raise TableFormatError("structure", no, "duplicate B table")
            r_B = r
        else:
            if k > kmax:
                raise TableFormatError("structure", no, f"k={k} exceeds kmax={kmax}")
            if k in r_A:
                raise TableFormatError("structure", no, f"duplicate A table for k={k}")
            r_A[k] = r
        i = j
    last = rows[-1][0]
    if r_B is None:
        raise TableFormatError("structure", last, "missing B table")
    missing = [k for k in range(kmax + 1) if k not in r_A]
    if missing:
        raise TableFormatError("structure", last, f"missing A tables for k={missing}")
    return CoefficientTableSet(x0, x1, kmax, eps, r_B, tuple(r_A[k] for k in range(kmax + 1)))


def load_tables(path) -> CoefficientTableSet:
    with open(path, encoding="utf-8") as fh:
        return parse_tables(fh.read())


def embedded_text() -> str:
    return resources.files(__package__).joinpath("data").joinpath("default_tables.txt").read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def embedded_default() -> CoefficientTableSet:
    """The shipped F_0..F_32 tables (eps 5e-14)."""
    return parse_tables(embedded_text())
