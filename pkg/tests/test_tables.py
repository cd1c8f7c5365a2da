import math

import pytest
from hypothesis import given, strategies as st

from minimax_boys.remez import RationalApproximant
from minimax_boys.tables import (
    CoefficientTableSet, TableFormatError, embedded_default, embedded_text, emit_tables, parse_tables,
)

EMBEDDED_FINGERPRINT = "7d2b95c80394affbab593a7f999c878e525db6fd66d8b8ef6af945d3de896a4a"

A_SHAPES = [(6, 9), (6, 10), (6, 10), (4, 12), (8, 9), (4, 13), (8, 9), (4, 13)] + [(8, 9)] * 10 + [
    (8, 8), (8, 8), (7, 9), (8, 8), (8, 8), (8, 8), (8, 8), (8, 8)] + [(7, 8)] * 7

MINIMAL = """\
# one region-A table
boys-minimax v1 kmax=0 eps=1e-3 x0=1.0 x1=4.0
table B k=0 n=0 m=1
2.0E+00
3.0E+00
1.0E+00
table A k=0 n=1 m=0
1.0E+00
-5.0E-01   # trailing comment
1.0E+00
"""


def test_embedded_header_and_spot_values():
    t = embedded_default()
    assert t.k_max == 32 and t.eps_tol == 5e-14
    assert t.x0 == 11.899848152108484 and t.x1 == 28.989337738820740
    assert t.r_B.numer[0] == 5.74537531702047552e07
    assert t.r_A[0].denom[0] == 4.59649054199579770e11
    assert t.r_A[0].numer[0] == 4.59649054199586751e11
    assert (t.r_B.n, t.r_B.m) == (5, 6)
    assert [(r.n, r.m) for r in t.r_A] == A_SHAPES


def test_embedded_fingerprint():
    assert embedded_default().fingerprint() == EMBEDDED_FINGERPRINT


def test_embedded_invariants():
    t = embedded_default()
    assert len(t.r_A) == t.k_max + 1
    for r in (t.r_B, *t.r_A):
        assert r.denom[-1] == 1.0
        assert all(isinstance(c, float) and math.isfinite(c) for c in r.numer + r.denom)


def test_round_trip_bit_exact():
    t = embedded_default()
    text = emit_tables(t)
    back = parse_tables(text)
    assert back == t
    assert emit_tables(back) == text
    for r1, r2 in zip((t.r_B, *t.r_A), (back.r_B, *back.r_A)):
        assert all(a.hex() == b.hex() for a, b in zip(r1.numer + r1.denom, r2.numer + r2.denom))


def test_minimal_file():
    t = parse_tables(MINIMAL)
    assert t.k_max == 0 and t.x0 == 1.0 and t.x1 == 4.0 and t.eps_tol == 1e-3
    assert t.r_B.numer == (2.0,) and t.r_B.denom == (3.0, 1.0)
    assert t.r_A[0].numer == (1.0, -0.5) and t.r_A[0].denom == (1.0,)


def _expect(text, kind, line):
    with pytest.raises(TableFormatError) as info:
        parse_tables(text)
    assert info.value.kind == kind, str(info.value)
    assert info.value.line == line, str(info.value)
    assert f"line {line}" in str(info.value)


def test_non_monic_rejected():
    _expect(MINIMAL.replace("3.0E+00\n1.0E+00", "3.0E+00\n0.99"), "non-monic", 6)


def test_malformed_header():
    _expect(MINIMAL.replace("boys-minimax v1", "boys-minimax v2"), "header", 2)
    _expect(MINIMAL.replace("kmax=0", "kmax=zero"), "header", 2)
    _expect("", "header", 1)


def test_wrong_count():
    _expect(MINIMAL.replace("table B k=0 n=0 m=1", "table B k=0 n=1 m=1"), "count", 7)
    _expect(MINIMAL.replace("table A k=0 n=1 m=0", "table A k=0 n=0 m=0"), "count", 10)


def test_non_finite():
    _expect(MINIMAL.replace("2.0E+00", "nan"), "non-finite", 4)
    _expect(MINIMAL.replace("x0=1.0", "x0=inf"), "non-finite", 2)


def test_structure_errors():
    _expect(MINIMAL.replace("table A k=0", "table A k=1"), "structure", 7)
    _expect(MINIMAL.replace("kmax=0", "kmax=1"), "structure", 10)
    _expect(MINIMAL.replace("table B k=0", "table B k=3"), "structure", 3)


def test_set_validation():
    r = RationalApproximant((1.0,), (1.0,))
    with pytest.raises(ValueError):
        CoefficientTableSet(1.0, 2.0, 1, 1e-3, r, (r,))
    with pytest.raises(ValueError):
        CoefficientTableSet(1.0, 2.0, 0, 1e-3, RationalApproximant((float("inf"),), (1.0,)), (r,))


def test_embedded_text_is_packaged():
    assert embedded_text().lstrip().startswith("#")


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
shapes = st.tuples(st.integers(0, 6), st.integers(0, 6))


@st.composite
def approximants(draw):
    n, m = draw(shapes)
    numer = draw(st.lists(finite, min_size=n + 1, max_size=n + 1))
    denom = draw(st.lists(finite, min_size=m, max_size=m)) + [1.0]
    return RationalApproximant(tuple(numer), tuple(denom))


@given(st.integers(0, 4), st.data())
def test_random_sets_round_trip(kmax, data):
    x0 = data.draw(st.floats(0, 100))
    x1 = x0 + data.draw(st.floats(1e-3, 100))
    eps = data.draw(st.floats(1e-300, 1.0))
    t = CoefficientTableSet(x0, x1, kmax, eps, data.draw(approximants()),
                            tuple(data.draw(approximants()) for _ in range(kmax + 1)))
    back = parse_tables(emit_tables(t))
    assert back == t
    assert back.fingerprint() == t.fingerprint()
