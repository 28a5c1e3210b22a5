"""Closed forms pinned against direct binomial sums and brute enumeration."""

import math
from fractions import Fraction
from itertools import product

import pytest

from hothand import (
    ZeroProbabilityError,
    bias_gap_k1,
    conditional_expectation,
    dp_joint,
    expected_hot_hand_k1,
    interior_term_expectation_k1,
    last_term_expectation_k1,
    recip_one_plus_binomial,
    recip_two_plus_binomial,
    verify_amgm_inequality,
)

RATIONAL_GRID = [
    Fraction(1, 1000),
    Fraction(1, 100),
    Fraction(1, 10),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(9, 10),
    Fraction(99, 100),
    Fraction(1),
]


def direct_recip_sum(n, p, shift):
    """Oracle: sum the binomial pmf term by term, exactly."""
    total = Fraction(0)
    for i in range(n + 1):
        total += Fraction(math.comb(n, i)) * p**i * (1 - p) ** (n - i) / (shift + i)
    return total


def enumeration_conditional_mean_k1(n, p):
    """Oracle: average N/D over all sequences with D > 0, weighted by the model."""
    num = Fraction(0)
    den = Fraction(0)
    for bits in product((0, 1), repeat=n):
        d = sum(bits[: n - 1])
        if d == 0:
            continue
        ones = sum(bits)
        w = p**ones * (1 - p) ** (n - ones)
        pairs = sum(bits[i] & bits[i + 1] for i in range(n - 1))
        num += w * Fraction(pairs, d)
        den += w
    return num / den


def test_recip_one_examples():
    assert recip_one_plus_binomial(1, Fraction(1, 2)) == Fraction(3, 4)
    for n in (0, 1, 5, 37):
        assert recip_one_plus_binomial(n, Fraction(1)) == Fraction(1, n + 1)
    for p in (Fraction(1, 7), Fraction(2, 3), 0.3):
        assert recip_one_plus_binomial(0, p) == 1


def test_recip_two_examples():
    assert recip_two_plus_binomial(1, Fraction(1, 2)) == Fraction(5, 12)
    for n in (0, 1, 4, 11):
        assert recip_two_plus_binomial(n, Fraction(1)) == Fraction(1, n + 2)
    # n=0 means Z=0 almost surely, so the value is 1/2 for every p
    assert recip_two_plus_binomial(0, Fraction(1, 2)) == Fraction(1, 2)
    assert recip_two_plus_binomial(0, Fraction(3, 7)) == Fraction(1, 2)
    assert recip_two_plus_binomial(0, 0.25) == pytest.approx(0.5, rel=1e-13)


def test_recip_moments_match_direct_sums_exactly():
    for n in (0, 1, 2, 5, 17, 40):
        for p in RATIONAL_GRID:
            assert recip_one_plus_binomial(n, p) == direct_recip_sum(n, p, 1)
            assert recip_two_plus_binomial(n, p) == direct_recip_sum(n, p, 2)


def test_recip_moments_double_path_close_to_exact():
    for n in (0, 3, 25, 150, 1000):
        for p in (0.001, 0.01, 0.25, 0.5, 0.9, 0.99, 1.0):
            exact1 = recip_one_plus_binomial(n, Fraction(p).limit_denominator(10**6))
            assert recip_one_plus_binomial(n, p) == pytest.approx(float(exact1), rel=1e-9)
            exact2 = recip_two_plus_binomial(n, Fraction(p).limit_denominator(10**6))
            assert recip_two_plus_binomial(n, p) == pytest.approx(float(exact2), rel=1e-9)


def test_bernoulli_step_recursion_exact():
    # E[1/(1+Z_{n+1})] = p E[1/(2+Z_n)] + (1-p) E[1/(1+Z_n)]
    for n in range(0, 60):
        for p in (Fraction(1, 100), Fraction(1, 3), Fraction(4, 5), Fraction(1)):
            lhs = p * recip_two_plus_binomial(n, p) + (1 - p) * recip_one_plus_binomial(n, p)
            assert lhs == recip_one_plus_binomial(n + 1, p)


def test_expected_hot_hand_examples():
    assert expected_hot_hand_k1(3, Fraction(1, 2)) == Fraction(5, 12)
    for p in (Fraction(1, 10), Fraction(1, 2), Fraction(17, 23)):
        assert expected_hot_hand_k1(2, p) == p
    for n in (2, 3, 10, 99):
        assert expected_hot_hand_k1(n, Fraction(1)) == 1
        assert expected_hot_hand_k1(n, 1.0) == 1.0


def test_expected_hot_hand_matches_enumeration():
    for n in range(2, 9):
        for p in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
            assert expected_hot_hand_k1(n, p) == enumeration_conditional_mean_k1(n, p)


def test_last_term_examples():
    assert last_term_expectation_k1(3, Fraction(1, 2)) == Fraction(1, 4)
    assert last_term_expectation_k1(5, Fraction(1, 2)) == Fraction(1, 8)
    assert last_term_expectation_k1(3, 1e-9) == pytest.approx(5e-10)


def test_interior_term_examples():
    assert interior_term_expectation_k1(3, Fraction(1, 2)) == Fraction(1, 6)
    # p=1 splits the sure total 1 into 1/2 boundary + 1/2 interior at n=3
    assert interior_term_expectation_k1(3, Fraction(1)) == Fraction(1, 2)
    assert last_term_expectation_k1(3, Fraction(1)) == Fraction(1, 2)


def test_term_decomposition_identity():
    for n in range(3, 40):
        for p in (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2), Fraction(9, 10), Fraction(1)):
            total = last_term_expectation_k1(n, p) + (n - 2) * interior_term_expectation_k1(n, p)
            assert total == expected_hot_hand_k1(n, p)


def test_bias_gap_examples():
    assert bias_gap_k1(3, Fraction(1, 2)) == Fraction(1, 12)
    assert bias_gap_k1(2, Fraction(1, 2)) == 0
    gap = bias_gap_k1(100, 0.5)
    exact = Fraction(1, 2) - expected_hot_hand_k1(100, Fraction(1, 2))
    assert gap == pytest.approx(float(exact), rel=1e-12)
    assert gap == pytest.approx(0.0050505050505, rel=1e-9)


def test_bias_gap_cross_checked_against_dp():
    exact = Fraction(1, 2) - conditional_expectation(dp_joint(100, 1, Fraction(1, 2)))
    assert bias_gap_k1(100, Fraction(1, 2)) == exact


def test_amgm_examples():
    assert verify_amgm_inequality(3, Fraction(1, 2)) is True
    assert verify_amgm_inequality(3, Fraction(999999, 1000000)) is True
    assert verify_amgm_inequality(3, 0.9999999) is True
    with pytest.raises(ZeroProbabilityError):
        verify_amgm_inequality(3, 0)


def test_bias_positive_on_grid():
    for n in range(3, 30):
        for i in range(1, 20):
            p = Fraction(i, 20)
            assert bias_gap_k1(n, p) > 0
            assert verify_amgm_inequality(n, p)


def test_expected_between_zero_and_p():
    for n in range(2, 26):
        for i in range(1, 10):
            p = Fraction(i, 10)
            value = expected_hot_hand_k1(n, p)
            assert 0 < value <= p
            assert (value == p) == (n == 2)


def test_domain_errors():
    with pytest.raises(ZeroProbabilityError):
        recip_one_plus_binomial(5, 0)
    with pytest.raises(ZeroProbabilityError):
        recip_two_plus_binomial(5, Fraction(0))
    with pytest.raises(ZeroProbabilityError):
        expected_hot_hand_k1(5, 0.0)
    with pytest.raises(ValueError):
        recip_one_plus_binomial(-1, Fraction(1, 2))
    with pytest.raises(ValueError):
        expected_hot_hand_k1(1, Fraction(1, 2))
    with pytest.raises(ValueError):
        last_term_expectation_k1(2, Fraction(1, 2))
    with pytest.raises(ValueError):
        bias_gap_k1(3, Fraction(1))  # bias statement needs p < 1
    with pytest.raises(ValueError):
        recip_one_plus_binomial(3, 1.5)
    with pytest.raises(TypeError):
        recip_one_plus_binomial(3, True)


def test_double_path_tracks_exact_path():
    cases = [(3, 0.5), (10, 0.1), (50, 0.9), (500, 0.001), (1000, 0.25)]
    for n, p in cases:
        exact = expected_hot_hand_k1(n, Fraction(p))  # Fraction(float) is the exact double value
        assert expected_hot_hand_k1(n, p) == pytest.approx(float(exact), rel=1e-12)


def test_double_path_survives_tiny_p_large_n():
    # direct powering of (1-p)^(n-1) returns garbage in this regime; the
    # compensated expm1/log1p form must stay accurate
    n, p = 10**4, 1e-8
    exact = float(expected_hot_hand_k1(n, Fraction(p)))
    assert expected_hot_hand_k1(n, p) == pytest.approx(exact, rel=1e-10)
    exact1 = float(recip_one_plus_binomial(n, Fraction(p)))
    assert recip_one_plus_binomial(n, p) == pytest.approx(exact1, rel=1e-12)
    exact2 = float(recip_two_plus_binomial(n, Fraction(p)))
    assert recip_two_plus_binomial(n, p) == pytest.approx(exact2, rel=1e-10)
