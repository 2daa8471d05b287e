"""Acceptance harness: one test per exit criterion, each printing a verdict.

Run `pytest -v tests/test_acceptance.py` (or the whole suite); every criterion
states its tolerance inline and fails loudly otherwise.
"""

import time

from chordal_forge.bounds import g1, g2, turan_number
from chordal_forge.oracle import f_exact
from chordal_forge.verify import (clique_process_exhaustive,
                                  clique_process_fuzz, constructions_suite,
                                  forest_lemma_fuzz, general_sweep, k2_suite,
                                  k3_suite, lemma_suite, sweep_rows_to_csv)


def _announce(num, detail):
    print(f"[PASS] criterion {num}: {detail}")


def test_criterion_01_f_6_10():
    t0 = time.time()
    entry = f_exact(6, 10)
    elapsed = time.time() - t0
    assert entry.f_exact == 8, f"f(6,10) = {entry.f_exact}, expected 8"
    assert elapsed < 300, f"took {elapsed:.0f}s, budget 300s"
    _announce(1, f"f(6,10) = 8 exactly in {elapsed:.1f}s")


def test_criterion_02_k3_thresholds():
    t0 = time.time()
    values = {(5, 9): 9, (6, 13): 12, (7, 17): 14}
    for (n, m), want in values.items():
        got = f_exact(n, m).f_exact
        assert got == want, f"f({n},{m}) = {got}, expected {want}"
        assert want == 3 * n - (n + 2) // 3 - 4
    elapsed = time.time() - t0
    assert elapsed < 900, f"took {elapsed:.0f}s, budget 900s"
    _announce(2, f"f(5,9)=9, f(6,13)=12, f(7,17)=14 exactly in {elapsed:.1f}s")


def test_criterion_03_k1_full_range():
    t0 = time.time()
    count = 0
    for n in range(1, 7):
        for m in range(1, turan_number(2, n) + 1):
            got = f_exact(n, m).f_exact
            assert got == g1(m) - 1, (n, m, got, g1(m) - 1)
            count += 1
    elapsed = time.time() - t0
    assert elapsed < 1800, f"took {elapsed:.0f}s, budget 1800s"
    _announce(3, f"f(n,m) = g1(m)-1 on all {count} pairs with n<=6, "
                 f"m<=t_2(n), in {elapsed:.1f}s")


def test_criterion_04_k2_spot_values():
    count = 0
    for n in range(1, 7):
        for m in range(turan_number(2, n) + 1, turan_number(3, n) + 1):
            got = f_exact(n, m).f_exact
            assert got == g2(n, m) - 3, (n, m, got, g2(n, m) - 3)
            count += 1
    _announce(4, f"f(n,m) = g2(n,m)-3 on all {count} pairs with n<=6 exactly")


def test_criterion_05_extract_k2_guarantee():
    t0 = time.time()
    checks = k2_suite(count=1000, nmin=5, nmax=40)
    elapsed = time.time() - t0
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    assert elapsed < 120, f"took {elapsed:.0f}s, budget 120s"
    _announce(5, f"1000/1000 k2 extractions certified, anchored and above "
                 f"g2(n,m)-3 in {elapsed:.1f}s")


def test_criterion_06_extract_k3_guarantee():
    t0 = time.time()
    checks = k3_suite(count=500, nmax=30)
    elapsed = time.time() - t0
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    assert elapsed < 300, f"took {elapsed:.0f}s, budget 300s"
    _announce(6, f"turan_plus_edge(3,5..30) tight and 500/500 random "
                 f"extractions above g3(n)-6 in {elapsed:.1f}s")


def test_criterion_07_lemma_suites():
    t0 = time.time()
    checks = lemma_suite(nmax=60)
    elapsed = time.time() - t0
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    assert elapsed < 60, f"took {elapsed:.0f}s, budget 60s"
    _announce(7, f"all 6 lemma families exhaustive to n=60 in {elapsed:.1f}s")


def test_criterion_08_process_and_forest_lemmas():
    checks = []
    for n in range(3, 8):
        for k in (2, 3):
            checks.append(clique_process_exhaustive(n, k))
    checks.append(clique_process_fuzz(count=1000))
    checks.append(forest_lemma_fuzz(count=1000))
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    _announce(8, "clique-process lemma exhaustive (n<=7, k<=3) plus 1000-fold "
                 "fuzz of both lemmas, zero violations")


def test_criterion_09_construction_tightness():
    checks = constructions_suite(nmax=7)
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    _announce(9, "oracle optimum equals the closed-form bounds on every "
                 "construction instance with n<=7")


def test_criterion_10_general_sweep(tmp_path):
    t0 = time.time()
    checks, rows = general_sweep()
    elapsed = time.time() - t0
    csv_path = tmp_path / "general_sweep.csv"
    csv_path.write_text(sweep_rows_to_csv(rows))
    assert csv_path.read_text().startswith("k,n,frac")
    assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]
    assert elapsed < 600, f"took {elapsed:.0f}s, budget 600s"
    worst = max(r["fitted_c_hat"] for r in rows)
    _announce(10, f"40/40 sweep outputs certified; fitted C-hat bounded "
                  f"(max {worst:.3f}) and non-increasing per slice; CSV at "
                  f"{csv_path} in {elapsed:.1f}s")
