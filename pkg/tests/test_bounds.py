import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordal_forge.bounds import (BoundDomainError, GeneralBoundParams,
                                  conj_general_bound, g1, g2, g2_all_witnesses,
                                  g2_witness, g3, general_target, turan_number,
                                  turan_parts_sizes)


def test_turan_number_examples():
    assert turan_number(2, 6) == 9
    assert turan_number(3, 7) == 16
    assert turan_parts_sizes(3, 7) == (3, 2, 2)
    assert turan_number(1, 10) == 0
    assert turan_number(12, 5) == 10  # k > n degenerates to K_n
    with pytest.raises(BoundDomainError):
        turan_number(0, 3)


def test_t3_first_difference():
    for n in range(5, 201):
        assert turan_number(3, n) - turan_number(3, n - 1) == (2 * n) // 3


def test_g1_examples():
    assert g1(0) == 0
    assert g1(1) == 2
    assert g1(6) == 5
    assert g1(7) == 6


@given(st.integers(0, 100000))
@settings(max_examples=300, deadline=None)
def test_g1_is_minimal(m):
    r = g1(m)
    assert turan_number(2, r) >= m
    assert r == 0 or turan_number(2, r - 1) < m


def test_g2_examples():
    w = g2_witness(6, 10)
    assert (w.value, w.t, w.r) == (11, 3, 2)
    w = g2_witness(4, 5)
    assert (w.value, w.t, w.r) == (8, 2, 2)
    with pytest.raises(BoundDomainError):
        g2_witness(6, 9)  # needs m >= t_2(n)+1


def test_g2_threshold_formula():
    # g2(n, t_2(n)+1) = 2n - ceil(n/2) + 2
    for n in range(4, 61):
        assert g2(n, turan_number(2, n) + 1) == 2 * n - (n + 1) // 2 + 2


def test_g2_witness_is_feasible_and_optimal_small():
    # brute-force over a box wide enough to cover any candidate
    for n in range(4, 13):
        for m in range(turan_number(2, n) + 1, n * (n - 1) // 2 + 1):
            w = g2_witness(n, m)
            assert w.t * (n - w.t) + turan_number(2, w.r) >= m
            assert w.value == 2 * n - w.t + w.r
            best = min(2 * n - t + r
                       for t in range(0, 3 * n + 1)
                       for r in range(0, 3 * n + 1)
                       if t * (n - t) + turan_number(2, r) >= m)
            assert w.value == best, (n, m)


def test_g2_all_witnesses_reach_optimum():
    ws = g2_all_witnesses(6, 10)
    assert all(w.value == 11 for w in ws)
    assert (11, 3, 2) in [(w.value, w.t, w.r) for w in ws]


def test_g3_examples():
    assert g3(6) == 18
    assert g3(5) == 15
    for n in range(5, 201):
        assert g3(n) - g3(n - 1) == (3 if n % 3 in (0, 2) else 2)


def test_general_target_arithmetic():
    v = general_target(GeneralBoundParams(3, 900, 1, 0.0))
    assert abs(v - ((8 / 3) * 900 + math.sqrt(8 / 3) - 6)) < 1e-9
    v = general_target(GeneralBoundParams(2, 100, 50, 1.0))
    assert abs(v - (150 + math.sqrt(150) - 10 - 3)) < 1e-9
    v = general_target(GeneralBoundParams(1, 25, 4, 0.0))
    assert abs(v - (math.sqrt(16) - 1)) < 1e-9
    with pytest.raises(BoundDomainError):
        general_target(GeneralBoundParams(2, 10, 0, 0.0))


def test_conj_general_matches_g2_at_k2():
    # the k=2 instance of the conjectured bound is exactly g2 - 3
    for n in range(4, 20):
        for m in range(turan_number(2, n) + 1, turan_number(3, n) + 1):
            v, t, r = conj_general_bound(2, n, m)
            assert v == g2(n, m) - 3, (n, m)


def test_g2_monotone_in_m():
    for n in range(4, 30):
        prev = None
        for m in range(turan_number(2, n) + 1, turan_number(3, n) + 1):
            val = g2(n, m)
            if prev is not None:
                assert val >= prev
            prev = val
