import numpy as np
import pytest

from minimax_boys.bench import BenchSpec, direct_z, fused_z, make_inputs, max_relative_deviation, run_bench
from minimax_boys.evaluate import boys_batch


def test_single_point_collapses():
    inp = make_inputs(BenchSpec(N=1, k=12, seed=4))
    F = boys_batch(2 * inp.x[0], 12).values
    expected = inp.y[0] * sum(c * f for c, f in zip(inp.c, F))
    assert abs(fused_z(inp, 12)[0] - expected) <= 1e-14 * abs(expected)


@pytest.mark.parametrize("k", [0, 3, 12, 32])
def test_fused_matches_direct(k):
    spec = BenchSpec(N=48, k=k, seed=k, domain_hi=40.0)
    inp = make_inputs(spec)
    assert max_relative_deviation(fused_z(inp, k), direct_z(inp, k)) <= spec.N * max(k, 1) * 1e-12


def test_inputs_cover_all_regions():
    inp = make_inputs(BenchSpec(N=256, seed=1))
    X = inp.x[:, None] + inp.x[None, :]
    assert (X < 11.9).any() and ((X > 12) & (X < 28.9)).any() and (X > 29).any()


def test_deterministic_and_thread_invariant():
    spec = BenchSpec(N=100, k=12, seed=9)
    a = run_bench(spec)
    b = run_bench(BenchSpec(N=100, k=12, seed=9, threads=3))
    assert np.array_equal(a.z, b.z) and a.checksum == b.checksum
    assert run_bench(BenchSpec(N=100, k=12, seed=10)).checksum != a.checksum


def test_spec_validation():
    for kw in ({"N": 0}, {"k": 33}, {"k": -1}, {"domain_hi": 0.0}, {"threads": 0}):
        with pytest.raises(ValueError):
            BenchSpec(**kw)
