from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmov.arith import (
    binomial_ext,
    divisors,
    fp_factor,
    gaussian_binomial,
    is_prime,
    moebius,
)


def test_moebius_small_values():
    assert moebius(1) == 1
    assert moebius(4) == 0
    assert moebius(6) == 1
    assert [moebius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_moebius_rejects_zero():
    with pytest.raises(ValueError):
        moebius(0)


def test_moebius_divisor_sum():
    # sum over d | n of mu(d) detects n = 1
    for n in range(1, 10001):
        s = sum(moebius(d) for d in divisors(n))
        assert s == (1 if n == 1 else 0), n


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(7) == [1, 7]
    with pytest.raises(ValueError):
        divisors(0)


@given(st.integers(1, 5000))
def test_divisors_exact(n):
    ds = divisors(n)
    assert ds == sorted(set(ds))
    assert all(n % d == 0 for d in ds)
    assert all(d in ds for d in range(1, n + 1) if n % d == 0)


def test_binomial_ext_values():
    assert binomial_ext(5, 2) == 10
    assert binomial_ext(-1, 0) == 1
    assert binomial_ext(-2, 3) == -4
    assert binomial_ext(3, 5) == 0


@given(st.integers(0, 40), st.integers(0, 40))
def test_binomial_ext_matches_comb(n, k):
    assert binomial_ext(n, k) == comb(n, k)


@given(st.integers(1, 30), st.integers(0, 30))
def test_binomial_ext_negative_reflection(n, k):
    assert binomial_ext(-n, k) == (-1) ** k * comb(n + k - 1, k)


def test_gaussian_binomial_values():
    assert gaussian_binomial(7, 0) == [1]
    assert gaussian_binomial(2, 1) == [1, 1]
    assert gaussian_binomial(4, 2) == [1, 1, 2, 1, 1]
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4)


def test_gaussian_binomial_q1_and_symmetry():
    for m in range(0, 31):
        for r in range(0, m + 1):
            g = gaussian_binomial(m, r)
            assert sum(g) == binomial_ext(m, r)
            assert g == gaussian_binomial(m, m - r)
            assert all(c > 0 for c in g)


def test_gaussian_binomial_degree():
    # degree r(m-r), palindromic coefficient list
    for m in range(0, 12):
        for r in range(0, m + 1):
            g = gaussian_binomial(m, r)
            assert len(g) - 1 == r * (m - r)
            assert g == g[::-1]


def test_fp_factor_values():
    assert fp_factor(5, 0) == 1
    assert fp_factor(2, 4) == 3
    assert fp_factor(3, 3) == 2
    with pytest.raises(ValueError):
        fp_factor(4, 3)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 60))
def test_fp_factor_closed_form(p, n):
    assert fp_factor(p, n) == factorial(n) // (p ** (n // p) * factorial(n // p))


def test_fp_congruence_odd_primes():
    # p^(2a) divides f_p(p^a n) - f_p(p^a)^n
    for p in (3, 5):
        for a in (1, 2):
            for n in range(0, 7):
                lhs = fp_factor(p, p**a * n) - fp_factor(p, p**a) ** n
                assert lhs % p ** (2 * a) == 0, (p, a, n)


def test_fp_congruence_two():
    for n in range(0, 51):
        assert (fp_factor(2, 2 * n) - (-1) ** (n // 2)) % 4 == 0, n


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
