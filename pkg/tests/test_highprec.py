import pytest
from hypothesis import given, strategies as st
from mpmath import mp

from minimax_boys.highprec import (
    hp, hp_erf, hp_erfc, hp_exp, hp_gamma_half, hp_upper_incomplete_gamma_half,
)

xs = st.floats(min_value=0, max_value=60, allow_nan=False)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_hp_converts_doubles_exactly():
    assert hp(0.1) == mp.mpf(0.1)
    assert hp("0.1", 40) != mp.mpf(0.1)


@given(st.floats(min_value=-700, max_value=700))
def test_exp_matches_mpmath(x):
    with mp.workdps(60):
        assert rel(hp_exp(x), mp.exp(x)) < mp.mpf(10) ** -49


@pytest.mark.parametrize("k", [0, 1, 5, 32, 90])
def test_gamma_half_matches_gamma(k):
    with mp.workdps(70):
        assert rel(hp_gamma_half(k), mp.gamma(k + mp.mpf(0.5))) < mp.mpf(10) ** -49


@given(xs)
def test_erf_erfc_match_mpmath(x):
    with mp.workdps(80):
        assert abs(hp_erf(x) - mp.erf(x)) < mp.mpf(10) ** -49
        assert rel(hp_erfc(x), mp.erfc(x)) < mp.mpf(10) ** -48


def test_erf_at_zero_and_switch_point():
    assert hp_erf(0) == 0 and hp_erfc(0) == 1
    with mp.workdps(80):
        for x in (1.999999, 2.0, 2.000001):
            assert rel(hp_erfc(x), mp.erfc(x)) < mp.mpf(10) ** -48


@given(st.integers(0, 40), st.floats(min_value=1e-3, max_value=250))
def test_upper_incomplete_gamma_half(k, x):
    with mp.workdps(80):
        ref = mp.gammainc(k + mp.mpf(0.5), x)
        assert rel(hp_upper_incomplete_gamma_half(k, x), ref) < mp.mpf(10) ** -45


def test_domain_errors():
    with pytest.raises(ValueError):
        hp_erfc(-1)
    with pytest.raises(ValueError):
        hp_upper_incomplete_gamma_half(2, -0.5)
    with pytest.raises(ValueError):
        hp_exp(float("nan"))
    with pytest.raises(ValueError):
        hp_gamma_half(-1)
