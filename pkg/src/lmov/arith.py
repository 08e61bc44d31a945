"""Number-theoretic and combinatorial primitives.

Everything is exact integer arithmetic; trial division is plenty at the
scales the invariant tables need (n well below 10^6).
"""

from __future__ import annotations

from functools import cache
from math import factorial, isqrt


@cache
def moebius(n: int) -> int:
    """Moebius function; n must be a positive integer."""
    if n < 1:
        raise ValueError("moebius is defined for positive integers")
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        else:
            p += 1 if p == 2 else 2
    if n > 1:
        out = -out
    return out


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n (n >= 1)."""
    if n < 1:
        raise ValueError("divisors is defined for positive integers")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def binomial_ext(n: int, k: int) -> int:
    """Binomial coefficient extended to every integer n via the falling
    factorial n(n-1)...(n-k+1)/k!; for n < 0 this equals
    (-1)^k * binomial(-n+k-1, k)."""
    if k < 0:
        raise ValueError("binomial_ext needs k >= 0")
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def gaussian_binomial(m: int, r: int) -> list[int]:
    """q-binomial coefficient as a dense list of coefficients of q^0..q^d.

    Computed by the q-Pascal recurrence, which keeps every intermediate
    value a polynomial with nonnegative integer coefficients.
    """
    if r < 0 or m < 0:
        raise ValueError("gaussian_binomial needs m, r >= 0")
    if r > m:
        raise ValueError("gaussian_binomial needs r <= m")
    r = min(r, m - r)
    # row[j] holds binom(i, j)_q while i runs 0..m
    row: list[list[int]] = [[1]] + [[] for _ in range(r)]
    for i in range(1, m + 1):
        for j in range(min(i, r), 0, -1):
            if j == i:
                row[j] = [1]
                continue
            # binom(i,j)_q = binom(i-1,j-1)_q + q^j * binom(i-1,j)_q
            a = row[j - 1]
            b = row[j]
            out = [0] * max(len(a), len(b) + j)
            for t, c in enumerate(a):
                out[t] += c
            for t, c in enumerate(b):
                out[t + j] += c
            row[j] = out
    return row[r] if row[r] else [1]


@cache
def fp_factor(p: int, n: int) -> int:
    """Product of the integers in [1, n] coprime to the prime p."""
    if not is_prime(p):
        raise ValueError("fp_factor needs a prime p")
    if n < 0:
        raise ValueError("fp_factor needs n >= 0")
    out = 1
    for i in range(1, n + 1):
        if i % p:
            out *= i
    return out
