"""Truncated formal power series over an exact coefficient ring.

Coefficients can be any value supporting ``+``, ``-``, ``*``, ``scale``
(multiplication by an exact rational), ``is_zero`` and -- where the
plethystic operations are used -- ``adams``.  LaurentQA, RationalQ and
RationalQA from :mod:`lmov.qa` all qualify.

``Series1`` stores a dense coefficient list up to a fixed order N and
arithmetic never reads beyond N.  ``Series2`` is the bivariate analogue
truncated at total degree N, used for the annulus kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Callable

from .arith import divisors, moebius


@dataclass(frozen=True)
class CoeffRing:
    """Zero and one of the coefficient ring, for seeding folds."""

    zero: Any
    one: Any


class Series1:
    """Power series in one variable, truncated at degree ``order``."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: CoeffRing, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs or [])
        cs = cs[: order + 1]
        cs += [ring.zero] * (order + 1 - len(cs))
        self.ring = ring
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, ring: CoeffRing, order: int, c=None) -> Series1:
        return cls(ring, order, [c if c is not None else ring.one])

    @classmethod
    def x(cls, ring: CoeffRing, order: int) -> Series1:
        return cls(ring, order, [ring.zero, ring.one])

    def coeff(self, n: int):
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        return (
            isinstance(other, Series1)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: Series1) -> Series1:
        n = min(self.order, other.order)
        return Series1(
            self.ring, n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: Series1) -> Series1:
        n = min(self.order, other.order)
        return Series1(
            self.ring, n, [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self) -> Series1:
        return self.scale(Fraction(-1))

    def __mul__(self, other: Series1) -> Series1:
        n = min(self.order, other.order)
        out = [self.ring.zero for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series1(self.ring, n, out)

    def scale(self, c) -> Series1:
        return Series1(self.ring, self.order, [x.scale(c) for x in self.coeffs])

    def mul_coeff(self, c) -> Series1:
        """Multiply every coefficient by a fixed ring element."""
        return Series1(self.ring, self.order, [x * c for x in self.coeffs])

    def shift(self, k: int) -> Series1:
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift needs k >= 0")
        return Series1(
            self.ring, self.order, [self.ring.zero] * k + self.coeffs[: self.order + 1 - k]
        )

    def pow_int(self, n: int) -> Series1:
        if n < 0:
            return self.inverse().pow_int(-n)
        out = Series1.constant(self.ring, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def inverse(self) -> Series1:
        """Reciprocal of a series with invertible (one) constant term."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise ValueError("series has no reciprocal: zero constant term")
        one = self.ring.one
        if c0 != one:
            raise ValueError("inverse implemented for unit constant term only")
        n = self.order
        inv = [self.ring.zero for _ in range(n + 1)]
        inv[0] = one
        for k in range(1, n + 1):
            acc = self.ring.zero
            for i in range(1, k + 1):
                if not self.coeffs[i].is_zero():
                    acc = acc + self.coeffs[i] * inv[k - i]
            inv[k] = self.ring.zero - acc
        return Series1(self.ring, n, inv)

    def truncate(self, order: int) -> Series1:
        return Series1(self.ring, order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def series_log(s: Series1) -> Series1:
    """log of a series with constant term exactly one, truncated alike."""
    if s.coeffs[0] != s.ring.one:
        raise ValueError("series_log needs constant term 1")
    n = s.order
    u = Series1(s.ring, n, [s.ring.zero] + s.coeffs[1:])
    out = Series1(s.ring, n)
    power = Series1.constant(s.ring, n)
    for k in range(1, n + 1):
        power = power * u
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out


def series_exp(s: Series1) -> Series1:
    """exp of a series with zero constant term, truncated alike."""
    if not s.coeffs[0].is_zero():
        raise ValueError("series_exp needs zero constant term")
    n = s.order
    out = Series1.constant(s.ring, n)
    power = Series1.constant(s.ring, n)
    for k in range(1, n + 1):
        power = power * s
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, factorial(k)))
    return out


def solve_functional(
    phi: Callable[[Series1], Series1], ring: CoeffRing, order: int
) -> Series1:
    """Unique series solution Y(X) of Y = X * phi(Y) with phi(0) invertible.

    Fixed-point iteration Y <- X*phi(Y): coefficients of degree <= k are
    frozen after k rounds, so ``order`` rounds suffice.
    """
    y = Series1(ring, order)
    phi0 = phi(y).coeffs[0]
    if phi0.is_zero():
        raise ValueError("phi(0) must be invertible (nonzero constant term)")
    for _ in range(order):
        y = phi(y).shift(1)
    return y


def plethystic_log(z: Series1) -> list:
    """Degree-graded plethystic logarithm of a series with Z(0) = 1.

    Returns [f_1, ..., f_N] with
    Z = exp( sum_{m>=1} sum_{d>=1} (1/d) adams_d(f_m) x^(d*m) ),
    computed as f_m = sum_{d|m} (moebius(d)/d) adams_d(F_{m/d}) from the
    ordinary logarithm F.
    """
    logz = series_log(z)
    n = z.order
    out = []
    for m in range(1, n + 1):
        acc = z.ring.zero
        for d in divisors(m):
            mu = moebius(d)
            if mu:
                acc = acc + logz.coeffs[m // d].adams(d).scale(Fraction(mu, d))
        out.append(acc)
    return out


def plethystic_exp(fs: list, ring: CoeffRing, order: int) -> Series1:
    """Inverse of plethystic_log: rebuild Z from [f_1, ..., f_M]."""
    acc = [ring.zero for _ in range(order + 1)]
    for m, fm in enumerate(fs, start=1):
        if m > order:
            break
        for d in range(1, order // m + 1):
            acc[d * m] = acc[d * m] + fm.adams(d).scale(Fraction(1, d))
    return series_exp(Series1(ring, order, acc))


class Series2:
    """Power series in two variables truncated at total degree ``order``.

    Coefficients are stored densely on the triangle i + j <= order.
    """

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: CoeffRing, order: int, coeffs: dict | None = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.ring = ring
        self.order = order
        self.coeffs = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i + j <= order and not c.is_zero():
                    self.coeffs[(i, j)] = c

    def coeff(self, i: int, j: int):
        if i + j > self.order:
            raise IndexError(f"({i},{j}) beyond total degree {self.order}")
        return self.coeffs.get((i, j), self.ring.zero)

    def __mul__(self, other: Series2) -> Series2:
        n = min(self.order, other.order)
        out: dict = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                if i1 + i2 + j1 + j2 > n:
                    continue
                k = (i1 + i2, j1 + j2)
                cur = out.get(k)
                p = a * b
                out[k] = p if cur is None else cur + p
        return Series2(self.ring, n, out)

    def __add__(self, other: Series2) -> Series2:
        n = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return Series2(self.ring, n, out)

    def __sub__(self, other: Series2) -> Series2:
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> Series2:
        return Series2(
            self.ring, self.order, {k: x.scale(c) for k, x in self.coeffs.items()}
        )


def series2_log(s: Series2) -> Series2:
    """log of a bivariate series with constant term one.

    Solves R * S = dS/dX2 for R = d(log S)/dX2 degree by degree, then
    integrates in X2.  Terms independent of X2 (j = 0) are not recovered;
    they are irrelevant for kernel coefficients with both indices >= 1.
    """
    n = s.order
    if s.coeff(0, 0) != s.ring.one:
        raise ValueError("series2_log needs constant term 1")
    # ds = dS/dX2: coefficient (i, j) of ds is (j+1) * S[(i, j+1)]
    ds: dict = {}
    for (i, j), c in s.coeffs.items():
        if j >= 1 and i + j - 1 <= n - 1:
            ds[(i, j - 1)] = c.scale(Fraction(j))
    # back-substitution in order of total degree
    r: dict = {}
    for deg in range(0, n):
        for i in range(deg + 1):
            j = deg - i
            acc = ds.get((i, j), s.ring.zero)
            # subtract sum over nonconstant terms of S
            for (i1, j1), c in s.coeffs.items():
                if i1 == 0 and j1 == 0:
                    continue
                i2, j2 = i - i1, j - j1
                if i2 < 0 or j2 < 0:
                    continue
                rc = r.get((i2, j2))
                if rc is not None:
                    acc = acc - c * rc
            if not acc.is_zero():
                r[(i, j)] = acc
    out: dict = {}
    for (i, j), c in r.items():
        out[(i, j + 1)] = c.scale(Fraction(1, j + 1))
    return Series2(s.ring, n, out)
