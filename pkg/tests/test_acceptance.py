"""Acceptance suite: one test per criterion, at the stated scales.

Run with `pytest tests/test_acceptance.py -v -s` to see one summary line per
criterion.  Everything is exact arithmetic; there are no tolerances.

Criterion 5 (minor determinant = closed form for every built-in scheme)
fails for inv-lp and inv-prlp, and that is a true mathematical outcome, not
a code bug: the closed form is the signed weight of the unique noncrossing
path tuple, but when a tile's weight depends on its trailing length, two
crossing paths change weight under the tail-swap involution, so the crossing
tuples do not cancel out of the determinant.  Smallest counterexample k=2,
n=1, pinned exactly in tests/test_lattice.py::test_trailing_weight_defect.
The criterion is kept as stated and reports the failure rather than
excluding the two schemes.
"""

import time

from qfib.identities import (
    convolution_count,
    k_reduction_count,
    verify_convolution,
    verify_k_reduction,
    verify_recursion,
    verify_specializations,
)
from qfib.lattice import (
    MinorSpec,
    build_minor,
    closed_form_det,
    determinant,
    enumerate_noncrossing_tuples,
)
from qfib.layered import (
    SCHEMED_PAIRS,
    builtin_scheme,
    distribution,
    enumerate_family,
    format_partition,
    format_permutation,
    inv,
    maj,
)
from qfib.tiling import (
    corrupted_scheme,
    enumerate_tilings,
    fibonacci_k,
    random_scheme,
    validate_weight_scheme,
    weighted_sum_enumerative,
    weighted_sum_recursive,
)


def _report(number, name, failures, elapsed, budget=None):
    verdict = "PASS" if not failures else f"FAIL ({len(failures)} checks)"
    budget_note = f", budget {budget:.0f}s" if budget else ""
    print(f"ACCEPTANCE {number} ({name}): {verdict} [{elapsed:.1f}s{budget_note}]")
    assert not failures, f"criterion {number} ({name}): " + "; ".join(
        str(f) for f in failures[:5]
    )


def test_criterion_1_counting():
    start = time.perf_counter()
    failures = []
    for n in range(0, 17):
        for k in range(1, 6):
            expected = fibonacci_k(n, k)
            if sum(1 for _ in enumerate_tilings(n, k)) != expected:
                failures.append(f"tiling count n={n} k={k}")
            for family in ("lp", "rlp", "prlp", "lpi"):
                if len(set(enumerate_family(family, n, k))) != expected:
                    failures.append(f"{family} image n={n} k={k}")
    elapsed = time.perf_counter() - start
    if elapsed >= 30:
        failures.append(f"runtime {elapsed:.1f}s over 30s target")
    _report(1, "counting", failures, elapsed, budget=30)


def test_criterion_2_distribution_equals_weight():
    start = time.perf_counter()
    failures = []
    if inv((4, 5, 3, 6, 1, 2)) != 10:
        failures.append("inv anchor")
    if maj((4, 5, 3, 6, 1, 2)) != 6:
        failures.append("maj anchor")
    listings = {
        ("lp", 4, 4): {"1234", "2341", "3412", "3421", "4123", "4231", "4312", "4321"},
        ("rlp", 4, 4): {"4321", "1432", "2143", "1243", "3214", "1324", "2134", "1234"},
        ("prlp", 4, 4): {"3214", "3241", "3412", "3421", "4213", "4231", "4312", "4321"},
    }
    for (family, n, k), expected in listings.items():
        got = {format_permutation(p) for p in enumerate_family(family, n, k)}
        if got != expected:
            failures.append(f"{family}_{n} listing")
    lpi = {format_partition(b) for b in enumerate_family("lpi", 4, 2)}
    if lpi != {"12/34", "1/2/34", "1/23/4", "12/3/4", "1/2/3/4"}:
        failures.append("layered partition listing")
    for pair in SCHEMED_PAIRS:
        for k in range(1, 5):
            w = builtin_scheme(pair, k)
            for n in range(0, 11):
                d = distribution(pair, n, k)
                e = weighted_sum_enumerative(n, k, w)
                r = weighted_sum_recursive(n, k, w)
                if not (d == e == r):
                    failures.append(f"{pair} n={n} k={k}")
    _report(2, "distribution = weight", failures, time.perf_counter() - start)


def test_criterion_3_ls_rb_equidistribution():
    start = time.perf_counter()
    failures = []
    for k in range(1, 5):
        for n in range(0, 11):
            if distribution("ls-lpi", n, k) != distribution("rb-lpi", n, k):
                failures.append(f"n={n} k={k}")
    _report(3, "ls/rb equidistribution", failures, time.perf_counter() - start)


def test_criterion_4_identity_suite():
    start = time.perf_counter()
    failures = []
    for k in (2, 3, 4):
        schemes = [builtin_scheme(p, k) for p in SCHEMED_PAIRS]
        schemes += [random_scheme(k, seed) for seed in (201, 202, 203)]
        for w in schemes:
            for n in range(1, 9):
                if not verify_recursion(n, k, w).passed:
                    failures.append(f"recursion {w.name} n={n} k={k}")
                if not verify_k_reduction(n, k, w).passed:
                    failures.append(f"kreduce {w.name} n={n} k={k}")
            for m in range(1, 9):
                for n in range(1, 9):
                    if not verify_convolution(m, n, k, w).passed:
                        failures.append(f"convolution {w.name} m={m} n={n} k={k}")
        for pair in SCHEMED_PAIRS:
            bad = [r for r in verify_specializations(pair, 8, k) if not r.passed]
            failures.extend(r.describe() for r in bad)
        for m in range(1, 9):
            for n in range(1, 9):
                lhs, rhs = convolution_count(m, n, k)
                if lhs != rhs:
                    failures.append(f"count convolution m={m} n={n} k={k}")
        for n in range(1, 9):
            lhs, rhs = k_reduction_count(n, k)
            if lhs != rhs:
                failures.append(f"count kreduce n={n} k={k}")
    elapsed = time.perf_counter() - start
    if elapsed >= 180:
        failures.append(f"runtime {elapsed:.1f}s over 180s target")
    _report(4, "identity suite", failures, elapsed, budget=180)


def test_criterion_5_determinants():
    start = time.perf_counter()
    failures = []
    for k in (2, 3, 4):
        for pair in SCHEMED_PAIRS:
            w = builtin_scheme(pair, k)
            for n in range(1, 7):
                spec = MinorSpec(n, k)
                det = determinant(build_minor(spec, w))
                if det != closed_form_det(spec, w):
                    failures.append(f"det!=closed {pair} k={k} n={n}")
                sign = 1 if (k % 2 == 1 or (n - 1) % 2 == 0) else -1
                if det.evaluate((1,) * k, 1) != sign:
                    failures.append(f"sign {pair} k={k} n={n}")
    for k in (2, 3):
        for pair in SCHEMED_PAIRS:
            w = builtin_scheme(pair, k)
            for n in range(1, 5):
                spec = MinorSpec(n, k)
                tuples = enumerate_noncrossing_tuples(spec)
                if len(tuples) != 1:
                    failures.append(f"tuple count {pair} k={k} n={n}")
                    continue
                (pt,) = tuples
                det = determinant(build_minor(spec, w))
                if pt.weight(w) * pt.sign() != det:
                    failures.append(f"sgn*wt!=det {pair} k={k} n={n}")
    _report(5, "determinants", failures, time.perf_counter() - start)


def test_criterion_6_falsifiability():
    start = time.perf_counter()
    failures = []
    bad = corrupted_scheme(3, seed=13)
    reports = [verify_recursion(n, 3, bad) for n in range(1, 8)]
    reports += [verify_convolution(m, n, 3, bad) for m in (1, 2, 3) for n in (1, 2, 3)]
    reports += [verify_k_reduction(n, 3, bad) for n in range(1, 8)]
    flagged = [r for r in reports if not r.passed]
    if not flagged:
        failures.append("no verifier failed on an incoherent scheme")
    elif not all(r.witness for r in flagged):
        failures.append("failure without a witness term")
    if validate_weight_scheme(bad, 8).ok:
        failures.append("validate_weight_scheme accepted an incoherent scheme")
    _report(6, "falsifiability", failures, time.perf_counter() - start)


def test_criterion_7_determinism():
    import os
    import subprocess
    import sys

    start = time.perf_counter()
    args = [
        sys.executable,
        "-m",
        "qfib",
        "verify",
        "--identity",
        "all",
        "--k",
        "3",
        "--max-n",
        "5",
    ]
    env = dict(os.environ)
    first = subprocess.run(args, capture_output=True, env=env)
    second = subprocess.run(args, capture_output=True, env=env)
    failures = []
    if first.stdout != second.stdout:
        failures.append("stdout differs between runs")
    if first.returncode != second.returncode:
        failures.append("exit code differs between runs")
    if not first.stdout:
        failures.append("no output produced")
    _report(7, "determinism", failures, time.perf_counter() - start)
