"""End-to-end acceptance checks. Each criterion records a pass/fail line that
the terminal summary prints after the run."""

import random
from fractions import Fraction

import numpy as np
from mpmath import mp

from minimax_boys.bench import BenchSpec, direct_z, fused_z, make_inputs, max_relative_deviation
from minimax_boys.pipeline import verify_tables
from minimax_boys.reference import ReferenceConfig, boys_reference, truncation_bound
from minimax_boys.regions import compute_x0, compute_x1
from minimax_boys.remez import (
    RemezProblem, golden_section_max, remez_solve, sturm_root_count, walsh_search, weighted_error,
)
from minimax_boys.tables import embedded_default

from test_remez import random_constructed_poly

EPS = 5e-14


def test_criterion_1_global_accuracy(acceptance):
    rep = verify_tables(embedded_default(), samples_per_region=100_000, seed=2024, x_max=200.0)
    worst = {reg: max(per[reg].max_error for per in rep.errors.values()) for reg in "ABC"}
    detail = ", ".join(f"{r} {v:.3e}" for r, v in worst.items()) + f" vs {EPS:g}"
    acceptance(1, "max |batch - reference| over k<=32, 1e5 x per region", rep.passed, detail)
    assert rep.passed, rep.failures()


def test_criterion_2_region_boundaries(acceptance, capsys):
    from minimax_boys.cli import main

    x0 = f"{float(compute_x0(32)):.15f}"
    x1 = f"{float(compute_x1(32, 5e-14)):.15f}"
    main(["regions", "--kmax", "32", "--eps", "5e-14"])
    printed = capsys.readouterr().out.split()
    ok = (x0, x1) == ("11.899848152108484", "28.989337738820740") and printed[1::2] == [x0, x1]
    acceptance(2, "x0/x1 digits", ok, f"x0={x0} x1={x1}")
    assert ok


def test_criterion_3_table_reproduction(acceptance):
    t = embedded_default()
    with mp.workdps(50):
        x0, x1 = mp.mpf(t.x0), mp.mpf(t.x1)
    cfg = ReferenceConfig(L=200)
    f = lambda x: boys_reference(0, x, cfg)
    prob = RemezProblem(f=f, a=x0, b=x1, n=5, m=6)
    res = remez_solve(prob)
    errs = [weighted_error(prob, res.approximant, x) for x in res.nodes]
    alternates = len(res.nodes) == 13 and all(a * b < 0 for a, b in zip(errs, errs[1:]))
    with mp.workdps(50):
        grid = mp.linspace(x0, x1, 1000)
        ours = res.approximant
        theirs = t.r_B.to_hp()
        rel = max(abs(ours(x) / theirs(x) - 1) for x in grid)
    acceptance(3, "remez (5,6) converges with 13 alternating nodes", alternates,
               f"{len(res.nodes)} nodes, E={mp.nstr(res.levelled_error, 5)}")
    acceptance(3, "matches embedded r_B on 1000 points", rel <= 1e-12, f"max rel diff {mp.nstr(rel, 3)}")

    w = walsh_search(f, x0, x1, EPS)
    acceptance(3, "walsh search total degree <= 11", w.met_tolerance and w.n + w.m <= 11,
               f"selected ({w.n},{w.m}) error {mp.nstr(w.sup_error, 4)}")
    assert alternates and rel <= 1e-12 and w.met_tolerance and w.n + w.m <= 11


def test_criterion_4_downward_from_region_a_tables(acceptance):
    rep = verify_tables(embedded_default(), samples_per_region=10_000, seed=77, regions="A")
    acceptance(4, "all F_l from r_A,k seeds, 1e4 region-A samples", rep.passed, f"max {rep.worst:.3e}")
    assert rep.passed, rep.failures()


def test_criterion_5a_truncation_ceiling(acceptance):
    x1 = mp.mpf("28.989337738820740")
    b = truncation_bound(0, x1, 150)
    ok = b <= mp.mpf("1.28e-69")
    acceptance(5, "truncation_bound(0, x1, 150) <= 1.28e-69", ok, f"bound = {mp.nstr(b, 4)}")
    assert ok


def test_criterion_5b_truncation_residuals(acceptance):
    rng = random.Random(150)
    worst_ratio = mp.zero
    ok = True
    for _ in range(1000):
        k, x = rng.randint(0, 32), rng.uniform(0, 30)
        with mp.workdps(50):
            a = boys_reference(k, x, ReferenceConfig(L=150))
            b = boys_reference(k, x, ReferenceConfig(L=200))
            resid = abs(a - b) / b
            bound = truncation_bound(k, x, 150) + mp.mpf(10) ** -49  # plus rounding at 50 digits
            ok &= resid <= bound
            worst_ratio = max(worst_ratio, resid / bound)
    acceptance(5, "L=150 vs L=200 residual within bound on 1e3 pairs", ok,
               f"max residual/bound {mp.nstr(worst_ratio, 3)}")
    assert ok


def test_criterion_6_remez_properties(acceptance):
    # de la Vallee-Poussin and alternation across several problems
    vp_ok = alt_ok = True
    for f, a, b, n, m, rho in [
        (mp.exp, 0, 1, 2, 2, None),
        (lambda x: mp.exp(-x) / (1 + x), 0, 3, 3, 2, lambda x: 1 + x),
        (mp.cos, 0, 2, 1, 4, None),
        (lambda x: mp.sqrt(1 + x), 0, 5, 4, 1, None),
    ]:
        prob = RemezProblem(f=f, a=a, b=b, n=n, m=m, rho=rho)
        res = remez_solve(prob)
        vp_ok &= all(abs(e["E"]) <= e["sup_error"] * (1 + mp.mpf(10) ** -30) for e in res.trace)
        errs = [weighted_error(prob, res.approximant, x) for x in res.nodes]
        alt_ok &= len(errs) == n + m + 2 and all(p * q < 0 for p, q in zip(errs, errs[1:]))
    acceptance(6, "de la Vallee-Poussin every iteration", vp_ok, "4 problems")
    acceptance(6, "alternation count n+m+2", alt_ok, "4 problems")

    rng = random.Random(6)
    sturm_ok = True
    for _ in range(1000):
        poly, roots = random_constructed_poly(rng)
        lo = Fraction(rng.randint(-50, 50), rng.randint(1, 4))
        hi = lo + Fraction(rng.randint(0, 60), rng.randint(1, 4))
        sturm_ok &= sturm_root_count(poly, lo, hi) == sum(1 for r in roots if lo < r <= hi)
    acceptance(6, "Sturm count vs brute force, 1e3 polynomials", sturm_ok, "constructed root sets")

    golden_err = 0.0
    for _ in range(200):
        c, w = rng.uniform(-10, 10), rng.uniform(0.01, 5)
        with mp.workdps(40):
            x = golden_section_max(lambda t: -(t - c) ** 2, mp.mpf(c - w), mp.mpf(c + 1.7 * w), 1e-12)
        golden_err = max(golden_err, abs(float(x) - c))
    with mp.workdps(40):
        golden_err = max(golden_err, float(abs(golden_section_max(mp.sin, mp.mpf(0), mp.mpf(3), 1e-10) - mp.pi / 2)))
    acceptance(6, "golden-section maxima within 1e-10", golden_err <= 1e-10, f"max error {golden_err:.2e}")

    res = remez_solve(RemezProblem(f=lambda x: x * x, a=0, b=1, n=1, m=0, eps_conv=1e-30))
    sq_ok = abs(res.sup_error - mp.mpf(1) / 8) <= 1e-12
    acceptance(6, "x^2 with (1,0) on [0,1] gives 1/8", sq_ok, f"sup error {mp.nstr(res.sup_error, 17)}")
    assert vp_ok and alt_ok and sturm_ok and golden_err <= 1e-10 and sq_ok


def test_criterion_7_benchmark_correctness(acceptance):
    spec = BenchSpec(N=256, k=12, seed=12345)
    inp = make_inputs(spec)
    dev = max_relative_deviation(fused_z(inp, spec.k), direct_z(inp, spec.k))
    tol = spec.N * spec.k * 1e-12
    acceptance(7, "fused z vs direct summation, N=256 k=12", dev <= tol, f"max rel dev {dev:.2e} <= {tol:.2e}")
    assert dev <= tol
