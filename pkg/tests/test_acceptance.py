"""End-to-end acceptance gate.

Every numbered criterion runs at its stated tolerance and prints one
``[A#] PASS/FAIL`` line (run with ``-s -v`` to see them live); criterion 4
additionally prints one line per sweep branch.

Known red: two of criterion 4's eight branches (T3_1i with the square
transform, T3_5i) fail honestly.  The claimed dominance is numerically
false for increasing strictly convex transforms; a hand-checkable
counterexample satisfying every stated hypothesis is pinned in
tests/test_theorems.py (TestVerify::test_counterexample_to_increasing_convex_branch).
The sweep machinery itself is correct: the violating instances re-pass all
hypothesis predicates, and every decreasing-transform branch verifies clean.
"""

import time

import numpy as np
import pytest
from scipy.integrate import quad

from llshock import (
    DEFAULT_SEED,
    LLParams,
    Outcome,
    builtin_h,
    compare_st,
    compare_st_mc,
    gen_ordered_pair,
    is_doubly_stochastic,
    ll_cdf,
    ll_pdf,
    ll_sample,
    ll_survival,
    ll_survival_dsigma,
    majorizes,
    make_grid,
    mc_tolerance,
    row_majorizes,
    row_weakly_majorizes,
    scenario_diff_table,
    scenario_systems,
    t_transform,
    transformed_parallel_cdf,
    transformed_parallel_cdf_partial,
    verdicts_agree,
    verify_theorem,
    weakly_submajorizes,
    weakly_supermajorizes,
)

GRID = make_grid(4096)

SWEEP_PLAN = (
    ("T3_1i", "square", None),
    ("T3_1ii", "neg_log", None),
    ("T3_2", "neg_log", 1),
    ("T3_2", "square", 2),
    ("T3_3", "neg_log", None),
    ("T3_4", "neg_log", None),
    ("T3_5i", "square", None),
    ("T3_5ii", "neg_log", None),
)


def report_line(tag, ok, detail):
    print(f"[{tag}] {'PASS' if ok else 'FAIL'} - {detail}")


def test_a1_clean_dominance_scenario():
    start = time.perf_counter()
    xs, diff = scenario_diff_table("CE3_1", GRID)
    elapsed = time.perf_counter() - start
    ok = bool(np.max(diff) <= 1e-12) and xs[0] == 0.0 and xs.size >= 4096 and elapsed < 1.0
    report_line(
        "A1", ok,
        f"CE3_1 difference <= 1e-12 at all {xs.size} grid points "
        f"(min {np.min(diff):.3e}), {elapsed:.2f}s",
    )
    assert np.max(diff) <= 1e-12
    assert xs[0] == 0.0 and xs.size >= 4096
    assert elapsed < 1.0


@pytest.mark.parametrize("tag,sid", [("A2", "CE3_2a"), ("A3", "CE3_2b")])
def test_a2_a3_crossing_scenarios(tag, sid):
    start = time.perf_counter()
    sys_x, sys_y = scenario_systems(sid)
    verdict = compare_st(sys_x, sys_y, GRID, tol=1e-9)
    elapsed = time.perf_counter() - start
    ok = (
        verdict.outcome is Outcome.CROSSING
        and verdict.max_positive_gap > 1e-6
        and verdict.max_negative_gap > 1e-6
        and len(verdict.crossing_witnesses) == 2
        and elapsed < 1.0
    )
    report_line(
        tag, ok,
        f"{sid} Crossing with gaps +{verdict.max_positive_gap:.3e} / "
        f"-{verdict.max_negative_gap:.3e}, {elapsed:.2f}s",
    )
    assert verdict.outcome is Outcome.CROSSING
    assert verdict.max_positive_gap > 1e-6 and verdict.max_negative_gap > 1e-6
    assert len(verdict.crossing_witnesses) == 2
    assert elapsed < 1.0


@pytest.fixture(scope="module")
def sweep_results():
    results = {}
    for tid, hname, branch in SWEEP_PLAN:
        start = time.perf_counter()
        report = verify_theorem(
            tid,
            builtin_h(hname),
            n_range=(2, 3, 4, 5, 6),
            instances=1000,
            grid=GRID,
            tol=1e-9,
            seed=DEFAULT_SEED,
            branch=branch,
        )
        results[(tid, hname, branch)] = (report, time.perf_counter() - start)
    return results


@pytest.mark.parametrize("tid,hname,branch", SWEEP_PLAN)
def test_a4_theorem_sweep_branch(sweep_results, tid, hname, branch):
    report, elapsed = sweep_results[(tid, hname, branch)]
    label = f"A4:{tid}/{hname}" + (f"/branch{branch}" if branch else "")
    report_line(
        label, report.passed,
        f"{len(report.violations)} violations in {report.instances_run} instances, {elapsed:.1f}s",
    )
    assert report.passed, (
        f"{tid} with {hname}: {len(report.violations)} of {report.instances_run} "
        "hypothesis-satisfying instances violate the claimed dominance. "
        "For increasing strictly convex transforms the claim is numerically false: "
        "(1/h')(h^{-1}(u)) is decreasing in u, so the cross-coordinate derivative "
        "comparison that certifies dominance for decreasing transforms reverses. "
        "Frozen counterexample: sigma=1, lam=(0.1,0.1), h=square, h(p)=(0.8,0.2), "
        "h(p*)=(0.5,0.5) gives F_X(0.5)=0.765566 > F_Y(0.5)=0.755565 "
        "(see tests/test_theorems.py::TestVerify::test_counterexample_to_increasing_convex_branch)."
    )


def test_a4_theorem_sweeps_runtime_and_summary(sweep_results):
    total = sum(elapsed for _, elapsed in sweep_results.values())
    all_passed = all(report.passed for report, _ in sweep_results.values())
    failed = [key[0] for key, (rep, _) in sweep_results.items() if not rep.passed]
    detail = f"8 branches x 1000 instances in {total:.1f}s (< 120s)"
    if not all_passed:
        detail += f"; dominance claims false for {sorted(set(failed))}"
    report_line("A4", all_passed, detail)
    assert total < 120.0


def test_a5_distribution_correctness():
    rng = np.random.default_rng(DEFAULT_SEED)
    worst_norm = 0.0
    worst_cdf = 0.0
    for _ in range(100):
        params = LLParams(rng.uniform(0.3, 4.0), rng.uniform(0.0, 4.0))
        total, _ = quad(lambda t: ll_pdf(params, t), 0.0, 1.0, limit=200)
        worst_norm = max(worst_norm, abs(total - 1.0))
        xs = np.sort(rng.uniform(0.0, 1.0, 20))
        acc, last = 0.0, 0.0
        for x in xs:
            seg, _ = quad(lambda t: ll_pdf(params, t), last, x, limit=200)
            acc += seg
            last = x
            worst_cdf = max(worst_cdf, abs(acc - ll_cdf(params, x)))
    worst_ks = 0.0
    for k in range(10):
        params = LLParams(rng.uniform(0.3, 4.0), rng.uniform(0.0, 4.0))
        draws = ll_sample(
            params, np.random.default_rng(np.random.SeedSequence([DEFAULT_SEED, k])), 10**5
        )
        s = np.sort(draws)
        f = ll_cdf(params, s)
        n = s.size
        ks = max(np.max(np.arange(1, n + 1) / n - f), np.max(f - np.arange(0, n) / n))
        worst_ks = max(worst_ks, ks)
    ok = worst_norm < 1e-8 and worst_cdf < 1e-8 and worst_ks < 0.00617
    report_line(
        "A5", ok,
        f"quadrature norm err {worst_norm:.2e} (100 pairs), cdf err {worst_cdf:.2e} "
        f"(20 pts/pair), KS {worst_ks:.5f} < 0.00617 (10 pairs x 1e5 draws)",
    )
    assert worst_norm < 1e-8
    assert worst_cdf < 1e-8
    assert worst_ks < 0.00617


def test_a6_derivative_checks():
    rng = np.random.default_rng(DEFAULT_SEED + 1)
    worst_rel = 0.0
    sign_ok = True
    for hname in ("neg_log", "square", "exp"):
        h = builtin_h(hname)
        sign = 1.0 if h.monotonicity == "decreasing" else -1.0
        for _ in range(100):
            n = int(rng.integers(2, 6))
            u = np.asarray(h.fn(rng.uniform(0.1, 0.9, n)), dtype=float)
            lam = rng.uniform(0.0, 3.0, n)
            sigma = rng.uniform(0.4, 3.0)
            i = int(rng.integers(0, n))
            x = rng.uniform(0.05, 0.85)
            exact = transformed_parallel_cdf_partial(u, lam, sigma, h, i, x)
            step = 1e-6 * (1.0 + abs(u[i]))
            up, down = u.copy(), u.copy()
            up[i] += step
            down[i] -= step
            approx = (
                transformed_parallel_cdf(up, lam, sigma, h, x)
                - transformed_parallel_cdf(down, lam, sigma, h, x)
            ) / (2.0 * step)
            worst_rel = max(worst_rel, abs(approx - exact) / abs(exact))
            sign_ok = sign_ok and (sign * exact >= 0.0)
    worst_w1 = 0.0
    w1_nonneg = True
    for _ in range(100):
        sigma = rng.uniform(0.4, 3.0)
        lam = rng.uniform(0.0, 3.0)
        x = rng.uniform(0.05, 0.85)
        step = 1e-6 * (1.0 + sigma)
        approx = (
            ll_survival(LLParams(sigma + step, lam), x)
            - ll_survival(LLParams(sigma - step, lam), x)
        ) / (2.0 * step)
        exact = ll_survival_dsigma(LLParams(sigma, lam), x)
        worst_w1 = max(worst_w1, abs(approx - exact) / abs(exact))
    for _ in range(1000):
        params = LLParams(rng.uniform(0.05, 5.0), rng.uniform(0.0, 5.0))
        w1_nonneg = w1_nonneg and ll_survival_dsigma(params, rng.uniform(1e-6, 1 - 1e-6)) >= 0.0
    ok = worst_rel < 1e-6 and worst_w1 < 1e-6 and sign_ok and w1_nonneg
    report_line(
        "A6", ok,
        f"shock-coordinate partials rel err {worst_rel:.2e} (100 pts x 3 transforms, "
        f"signs match), shape derivative rel err {worst_w1:.2e}, nonnegative at 1000 points",
    )
    assert worst_rel < 1e-6 and worst_w1 < 1e-6
    assert sign_ok and w1_nonneg


def test_a7_majorization_implication_chain():
    rng = np.random.default_rng(DEFAULT_SEED + 2)
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        x, y = gen_ordered_pair("majorize", n, None, rng)
        assert majorizes(x, y).holds
        assert weakly_supermajorizes(x, y).holds
        assert weakly_submajorizes(x, y).holds
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        a, b = gen_ordered_pair("chain", n, None, rng)
        assert row_majorizes(a, b).holds
        assert row_weakly_majorizes(a, b).holds
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 8))
        prod = np.eye(n)
        for _ in range(int(rng.integers(1, 6))):
            prod = prod @ t_transform(n, *rng.choice(n, 2, replace=False), rng.random())
        assert is_doubly_stochastic(prod, tol=1e-12)
        worst = max(
            worst,
            float(np.max(np.abs(prod.sum(axis=0) - 1.0))),
            float(np.max(np.abs(prod.sum(axis=1) - 1.0))),
        )
    report_line(
        "A7", True,
        "1000 majorize pairs imply both weak orders; 1000 chain pairs pass row "
        f"orders; 1000 T-transform products doubly stochastic (worst sum err {worst:.1e})",
    )


def test_a8_oracle_agreement():
    n = 10**6
    outcomes = []
    verdicts = {}
    ok = True
    for sid in ("CE3_1", "CE3_2a", "CE3_2b"):
        sys_x, sys_y = scenario_systems(sid)
        exact = compare_st(sys_x, sys_y, GRID, tol=1e-9)
        mc = compare_st_mc(sys_x, sys_y, n, DEFAULT_SEED, GRID)
        verdicts[sid] = (exact, mc)
        ok = ok and verdicts_agree(exact, mc)
        outcomes.append(f"{sid}: {exact.outcome.value}/{mc.outcome.value}")
    exact1, mc1 = verdicts["CE3_1"]
    strong = mc1.outcome is exact1.outcome is Outcome.FIRST_DOMINATES
    report_line(
        "A8", ok and strong,
        f"analytic/MC at n=1e6 (mc tol {mc_tolerance(n):.4f}): " + "; ".join(outcomes),
    )
    for sid, (exact, mc) in verdicts.items():
        assert verdicts_agree(exact, mc), f"{sid}: exact {exact.to_json()} vs mc {mc.to_json()}"
    assert strong  # the sampler resolves CE3_1's dominance outright
