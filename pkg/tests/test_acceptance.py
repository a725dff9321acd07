"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
happen; plain `pytest` still enforces everything.
"""

import json
import math
import subprocess
import sys
import time

from lambert_tsallis.classify import (Rule, classify_expq,
                                      classify_lnq_derivative, classify_tower,
                                      classify_wq)
from lambert_tsallis.exact import ArithmeticClass, parse_exact
from lambert_tsallis.qexp import exp_q
from lambert_tsallis.verify import (algebraicity_scan, branch_point_check,
                                    run_branch_suite, run_derivative_suite,
                                    run_residual_suite)
from lambert_tsallis.wq import Branch, branch_point, wq


def report(num, ok, detail):
    line = f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def test_criterion_01_closed_form_reproduction():
    res = wq(2.0, 1.0, Branch.UPPER)
    err = abs(res.w - 0.5)
    start = time.perf_counter()
    n = 50
    for _ in range(n):
        wq(2.0, 1.0, Branch.UPPER)
    per_solve = (time.perf_counter() - start) / n
    report(1, err <= 1e-12 and per_solve < 1e-3,
           f"wq(2,1) = {res.w!r}, err {err:.1e} (<=1e-12), "
           f"{per_solve * 1e6:.0f} us/solve (<1ms)")


def test_criterion_02_classical_recovery():
    bp = branch_point(1.0)
    bp_err = max(abs(bp.z_b - (-1.0 / math.e)), abs(bp.w_b - (-1.0)))

    lo, hi = 0.0, 1.0
    f = lambda w: w * math.exp(w) - 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    oracle = 0.5 * (lo + hi)
    w_err = abs(wq(1.0, 1.0, Branch.UPPER).w - oracle)
    report(2, bp_err <= 1e-12 and w_err <= 1e-10,
           f"branch_point(1) err {bp_err:.1e} (<=1e-12), "
           f"wq(1,1) vs bisection oracle err {w_err:.1e} (<=1e-10)")


def test_criterion_03_residual_suite():
    start = time.perf_counter()
    checks = run_residual_suite()
    elapsed = time.perf_counter() - start
    worst = max(c.measured for c in checks)
    ok = all(c.passed for c in checks) and elapsed < 10.0
    report(3, ok, f"{len(checks)} q/branch grids x 50 z, worst scaled "
                  f"residual {worst:.1e} (<=1e-10), {elapsed:.2f}s (<10s)")


def test_criterion_04_derivative_vs_finite_difference():
    checks = run_derivative_suite()
    worst = max(c.measured for c in checks)
    report(4, all(c.passed for c in checks),
           f"derivative vs central difference on all interior grids, worst "
           f"relative error {worst:.1e} (<=1e-6)")


def test_criterion_05_polynomial_identity():
    worst = 0.0
    for q in (1.5, math.sqrt(2.0), math.sqrt(3.0), 2.5):
        x = wq(q, 1.0, Branch.UPPER).w
        worst = max(worst, abs(math.exp((q - 1.0) * math.log(x))
                               - (1.0 - q) * x - 1.0))
    report(5, worst <= 1e-10,
           f"x^(q-1) - (1-q)x - 1 at x = W_q(1), worst residual "
           f"{worst:.1e} (<=1e-10)")


def test_criterion_06_classifier_decision_table():
    R = ArithmeticClass.RATIONAL
    A = ArithmeticClass.ALGEBRAIC_IRRATIONAL
    T = ArithmeticClass.TRANSCENDENTAL
    U = ArithmeticClass.UNKNOWN
    table = [
        (classify_expq, ("sqrt(2)", "1"), T, Rule.THEOREM_2),
        (classify_expq, ("1+sqrt(2)", "1"), R, Rule.CUTOFF_ZERO),
        (classify_expq, ("1/2", "pi"), T, Rule.THEOREM_5),
        (classify_expq, ("3/2", "1/3"), U, Rule.GUARD_FALLTHROUGH),
        (classify_wq, ("sqrt(2)", "1"), T, Rule.THEOREM_1),
        (classify_wq, ("2", "1"), R, Rule.CLOSED_FORM_Q2),
        (classify_wq, ("2", "sqrt(2)"), A, Rule.CLOSED_FORM_Q2),
        (classify_wq, ("sqrt(3)", "5/7"), T, Rule.THEOREM_3),
        (classify_wq, ("4/3", "2"), U, Rule.GUARD_FALLTHROUGH),
        (classify_lnq_derivative, ("sqrt(2)", "2"), T, Rule.THEOREM_4),
        (classify_lnq_derivative, ("sqrt(2)", "1"), R, Rule.EXACT_VALUE),
        (classify_lnq_derivative, ("3", "2"), R, Rule.EXACT_VALUE),
        (classify_tower, ("1/2",), T, Rule.THEOREM_6),
        (classify_tower, ("2",), U, Rule.GUARD_FALLTHROUGH),
        (classify_tower, ("3/4",), T, Rule.THEOREM_6),
    ]
    bad = []
    for fn, args, verdict, rule in table:
        res = fn(*(parse_exact(a) for a in args))
        if res.verdict is not verdict or res.rule is not rule:
            bad.append((fn.__name__, args, res.verdict, res.rule))
    extra_ok = (classify_wq(parse_exact("2"), parse_exact("1")).exact_value
                == parse_exact("1/2"))
    report(6, not bad and extra_ok,
           f"{len(table)} decision-table cases, verdict and rule exact"
           + (f"; mismatches: {bad}" if bad else ""))


def test_criterion_07_scan_oracle():
    start = time.perf_counter()
    half = algebraicity_scan(0.5, 1, 2)
    root2 = algebraicity_scan(math.sqrt(2.0), 2, 2)
    omega = algebraicity_scan(wq(1.0, 1.0).w, 3, 30, eps=1e-8)
    elapsed = time.perf_counter() - start
    ok = (half.hit and half.best_poly == (2, -1)
          and root2.hit and root2.best_poly == (1, 0, -2)
          and not omega.hit and elapsed < 60.0)
    report(7, ok, f"2x-1 at 1/2: {half.best_poly}, x^2-2 at sqrt(2): "
                  f"{root2.best_poly}, W(1) best |p| {omega.best_abs_value:.1e} "
                  f"no hit, {elapsed:.2f}s (<60s)")


def test_criterion_08_branch_geometry():
    checks = run_branch_suite()
    geo_ok = all(c.passed for c in checks)
    bp_ok = all(branch_point_check(q).passed for q in (0.0, 0.5, 1.0, 1.5))
    try:
        wq(2.0, -0.5, Branch.LOWER)
        refusal_ok = False
    except Exception:
        refusal_ok = True
    report(8, geo_ok and bp_ok and refusal_ok,
           f"monotonicity/concavity grids, branch_point_check on 4 q values, "
           f"lower-branch refusal at q = 2 ({len(checks)} checks)")


def test_criterion_09_q_continuity():
    worst = 0.0
    for z in (0.5, 1.0, 2.0):
        w1 = wq(1.0, z, Branch.UPPER).w
        for q in (1.0 - 1e-6, 1.0 + 1e-6):
            worst = max(worst, abs(wq(q, z, Branch.UPPER).w - w1))
    report(9, worst <= 1e-4,
           f"|wq(1 +- 1e-6, z) - wq(1, z)| worst {worst:.1e} (<=1e-4)")


def test_criterion_10_cli_contract():
    cli = [sys.executable, "-m", "lambert_tsallis"]
    ok_run = subprocess.run(cli + ["eval", "wq", "--q", "2", "--z", "1",
                                   "--format", "json"],
                            capture_output=True, text=True)
    dom_run = subprocess.run(cli + ["eval", "wq", "--q", "1.5", "--z", "-9"],
                             capture_output=True, text=True)
    bad_run = subprocess.run(cli + ["classify", "wq", "--q", "2/0", "--z", "1"],
                             capture_output=True, text=True)
    parses = True
    try:
        doc = json.loads(ok_run.stdout)
        parses = abs(doc["value"] - 0.5) <= 1e-12
        json.loads(subprocess.run(
            cli + ["verify", "--suite", "eq5", "--format", "json"],
            capture_output=True, text=True).stdout)
    except (json.JSONDecodeError, KeyError):
        parses = False
    ok = (ok_run.returncode == 0 and dom_run.returncode == 1
          and bad_run.returncode == 2 and parses)
    report(10, ok, f"exit codes {ok_run.returncode}/{dom_run.returncode}/"
                   f"{bad_run.returncode} for valid/out-of-domain/malformed, "
                   f"JSON parses")


def test_exp_q_cutoff_sanity_for_acceptance_table():
    # backs criterion 6's CutoffZero rows: the numeric layer agrees exactly
    assert exp_q(1.0 + math.sqrt(2.0), 1.0) == 0.0
    assert exp_q(2.0, math.pi) == 0.0
