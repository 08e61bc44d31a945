"""Reduced open-string partition function, Ooguri-Vafa and
Donaldson-Thomas extraction, and the GW/DT series identity.

Everything here is a-free: coefficients are exact rational functions of
q on the half-integer exponent lattice (RationalQ).  "Is a Laurent
polynomial" decisions are exact divisions, never numeric truncations.

Ooguri-Vafa route: the reduced series Z_tau(q, x) = sum H_n(q) x^n is
fed to the plethystic logarithm; each level f_m must collapse to
(Laurent polynomial)/(1-q), and the integer table N_{m,k} is read off
the numerator at q^((k+1)/2).  The product-form reconstruction
prod (1 - q^((k+1)/2 + l) x^m)^N_{m,k} over l >= 0 is verified exactly
by summing the geometric layers into 1/(1-q^d) factors and comparing
rational functions coefficient by coefficient, which implies agreement
to every finite q-order.

Donaldson-Thomas route: identical plumbing applied to the loop-quiver
Hilbert-Poincare series P_m(q, t) with t twisted by (-1)^(m-1); the
extracted c_{n,k} must be nonnegative integers with finite support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .genus0 import TheoremViolation
from .onehole import CheckReport
from .qa import RationalQ, one_minus_q_pow
from .series import CoeffRing, Series1, plethystic_log, series_exp

_QRING = CoeffRing(zero=RationalQ.zero(), one=RationalQ.one())

ONE_MINUS_Q = one_minus_q_pow(1)


def _q_factorial_den(n: int) -> RationalQ:
    """(1-q)(1-q^2)...(1-q^n) as a RationalQ (n >= 0)."""
    out = RationalQ.one()
    for i in range(1, n + 1):
        out = out * one_minus_q_pow(i)
    return out


def h_top(n: int, tau: int) -> RationalQ:
    """Top-charge row coefficient
    (-1)^(n(tau-1)) q^(n(n-1)tau/2 + n^2/2) / prod_{i<=n}(1-q^i)."""
    if n < 0:
        raise ValueError("h_top needs n >= 0")
    sign = (-1) ** ((n * (tau - 1)) % 2)
    num = RationalQ.monomial(n * (n - 1) * tau + n * n, sign)
    return num / _q_factorial_den(n)


def z_tau_series(tau: int, order: int) -> Series1:
    """Reduced partition function sum_n H_n(q) x^n truncated at x^order."""
    return Series1(_QRING, order, [h_top(n, tau) for n in range(order + 1)])


def coha_series(loops: int, order: int) -> Series1:
    """Hilbert-Poincare series of the loop quiver:
    sum_n q^(-(m-1) n(n-1)/2) / prod_{i<=n}(1-q^i) t^n."""
    if loops < 1:
        raise ValueError("coha_series needs loops >= 1")
    coeffs = []
    for n in range(order + 1):
        num = RationalQ.monomial(-(loops - 1) * n * (n - 1), 1)
        coeffs.append(num / _q_factorial_den(n))
    return Series1(_QRING, order, coeffs)


# ---------------------------------------------------------------------------
# Ooguri-Vafa extraction
# ---------------------------------------------------------------------------


@dataclass
class OVTable:
    """Integer table N_{m,k}(tau) with finite k-support per m."""

    tau: int
    max_m: int
    rows: dict  # m -> {k: N}
    report: CheckReport = field(default_factory=lambda: CheckReport("ov", {}))

    def json_obj(self) -> dict:
        return {
            "tau": self.tau,
            "rows": [
                {
                    "m": m,
                    "entries": [
                        {"k": k, "N": self.rows[m][k]} for k in sorted(self.rows[m])
                    ],
                }
                for m in sorted(self.rows)
            ],
        }

    def csv_rows(self):
        yield ["tau", "m", "k", "N"]
        for m in sorted(self.rows):
            for k in sorted(self.rows[m]):
                yield [self.tau, m, k, self.rows[m][k]]


def _laurent_from_rational(r: RationalQ, what: str) -> dict:
    """u -> coefficient of the Laurent polynomial r, or raise."""
    if not r.is_laurent():
        raise ValueError(f"{what} is not a Laurent polynomial: {r!r}")
    return {r.off + i: c for i, c in enumerate(r.num) if c}


def ooguri_vafa(tau: int, max_m: int, reconstruct: bool = True) -> OVTable:
    """Extract N_{m,k}(tau) for m <= max_m from the reduced series.

    Integrality and finite support are conjecture-level checks: failures
    land in the report instead of raising.  Negative values are also
    reported (the expected tables are nonnegative) without failing.
    """
    if max_m < 1:
        raise ValueError("ooguri_vafa needs max_m >= 1")
    rep = CheckReport("ov", {"tau": tau, "max_m": max_m})
    z = z_tau_series(tau, max_m)
    fs = plethystic_log(z)
    rows: dict = {}
    for m in range(1, max_m + 1):
        g = fs[m - 1] * ONE_MINUS_Q
        try:
            coeffs = _laurent_from_rational(g, f"(1-q) f_{m}")
        except ValueError as e:
            rep.failures.append({"m": m, "reason": str(e)})
            rows[m] = {}
            continue
        entries: dict = {}
        for u, c in coeffs.items():
            k = u - 1  # exponent q^(u/2) = q^((k+1)/2)
            val = -Fraction(c)
            if val.denominator != 1:
                rep.failures.append({"m": m, "k": k, "reason": f"non-integer {val}"})
                continue
            entries[k] = int(val)
        negatives = {k: v for k, v in entries.items() if v < 0}
        if negatives:
            rep.notes.append({"m": m, "negative_entries": negatives})
        rows[m] = entries
    table = OVTable(tau, max_m, rows, rep)
    if reconstruct and ov_reconstruction_residue(table) is not None:
        rep.failures.append({"reason": "product reconstruction mismatch"})
    return table


def ov_reconstruction_residue(table: OVTable):
    """Exact check that prod_{m,k,l>=0} (1 - q^((k+1)/2+l) x^m)^N_{m,k}
    rebuilds the reduced series; None if it matches, else the first bad n.

    The factors at level m contribute, after summing the geometric tower
    over l, the exact log sum_{d} -(1/d) N_{m,k} q^(d(k+1)/2)/(1-q^d) x^(dm).
    """
    order = table.max_m
    acc = [RationalQ.zero() for _ in range(order + 1)]
    for m, entries in table.rows.items():
        for d in range(1, order // m + 1):
            inv = one_minus_q_pow(d)
            layer = RationalQ.zero()
            for k, nmk in entries.items():
                layer = layer + RationalQ.monomial(d * (k + 1), -Fraction(nmk, d))
            acc[d * m] = acc[d * m] + layer / inv
    z_rec = series_exp(Series1(_QRING, order, acc))
    z = z_tau_series(table.tau, order)
    for n in range(order + 1):
        if z_rec.coeff(n) != z.coeff(n):
            return n
    return None


# ---------------------------------------------------------------------------
# Donaldson-Thomas extraction
# ---------------------------------------------------------------------------


@dataclass
class DTTable:
    """Nonnegative integer table c_{n,k} for the m-loop quiver."""

    loops: int
    max_n: int
    rows: dict  # n -> {k: c}

    def json_obj(self) -> dict:
        return {
            "loops": self.loops,
            "rows": [
                {
                    "n": n,
                    "entries": [
                        {"k": k, "c": self.rows[n][k]} for k in sorted(self.rows[n])
                    ],
                }
                for n in sorted(self.rows)
            ],
        }

    def csv_rows(self):
        yield ["loops", "n", "k", "c"]
        for n in sorted(self.rows):
            for k in sorted(self.rows[n]):
                yield [self.loops, n, k, self.rows[n][k]]

    def dt_polynomial(self, n: int) -> dict:
        """DT_n(q) = sum_k c_{n,k} q^k as {k: c}."""
        return dict(self.rows[n])


def dt_extract(loops: int, max_n: int) -> DTTable:
    """Quantum DT invariants of the loop quiver, certified nonnegative.

    Substitutes t -> (-1)^(loops-1) t in the Hilbert-Poincare series,
    takes the plethystic log, demands (1-q) L_n be Laurent, and reads
    c_{n,k} = (-1)^((loops-1) n) [q^(-k)] ((1-q) L_n) for k >= 0.
    """
    if max_n < 1:
        raise ValueError("dt_extract needs max_n >= 1")
    p = coha_series(loops, max_n)
    twist = (-1) ** ((loops - 1) % 2)
    twisted = Series1(
        _QRING,
        max_n,
        [c.scale(twist ** (n % 2)) if twist < 0 else c for n, c in enumerate(p.coeffs)],
    )
    ls = plethystic_log(twisted)
    rows: dict = {}
    for n in range(1, max_n + 1):
        g = ls[n - 1] * ONE_MINUS_Q
        if not g.is_laurent():
            raise TheoremViolation(
                f"(1-q) L_{n} is not a Laurent polynomial (loops={loops})"
            )
        sign = (-1) ** (((loops - 1) * n) % 2)
        entries: dict = {}
        for u, c in _laurent_from_rational(g, f"(1-q) L_{n}").items():
            if u % 2:
                raise TheoremViolation(
                    f"half-integer q-power in DT level {n} (loops={loops})"
                )
            k = -u // 2
            val = sign * Fraction(c)
            if val.denominator != 1:
                raise TheoremViolation(f"non-integer DT entry c_({n},{k}) = {val}")
            val = int(val)
            if k < 0 or val < 0:
                raise TheoremViolation(
                    f"DT entry outside the certified cone: c_({n},{k}) = {val}"
                )
            if val:
                entries[k] = val
        rows[n] = entries
    return DTTable(loops, max_n, rows)


# ---------------------------------------------------------------------------
# the GW/DT identity and the OV/DT dictionary
# ---------------------------------------------------------------------------


def gwdt_check(tau: int, order: int) -> CheckReport:
    """Exact equality Z_tau(q, x) = P_{-tau}(q, (-1)^(tau-1) x q^(1/2))
    coefficient by coefficient up to x^order; needs tau <= -1."""
    if tau > -1:
        raise ValueError("gwdt_check needs tau <= -1")
    rep = CheckReport("gwdt-identity", {"tau": tau, "order": order})
    z = z_tau_series(tau, order)
    p = coha_series(-tau, order)
    for n in range(order + 1):
        sub = RationalQ.monomial(n, (-1) ** ((n * (tau - 1)) % 2))
        if z.coeff(n) != p.coeff(n) * sub:
            rep.failures.append({"n": n})
    return rep


def ov_dt_shift_check(tau: int, max_n: int) -> CheckReport:
    """Empirical dictionary between the two integer tables for tau <= -1:

    N_{n, n-2k-1}(tau) = -(-1)^((tau-1) n) c_{n,k} of the (-tau)-loop
    quiver, the index shift coming from matching q^(n/2 + l - k) factors
    against q^((k'+1)/2 + l).
    """
    if tau > -1:
        raise ValueError("ov_dt_shift_check needs tau <= -1")
    rep = CheckReport("ov-dt-shift", {"tau": tau, "max_n": max_n})
    ov = ooguri_vafa(tau, max_n, reconstruct=False)
    dt = dt_extract(-tau, max_n)
    for n in range(1, max_n + 1):
        mapped = {}
        sign = -((-1) ** (((tau - 1) * n) % 2))
        for k, c in dt.rows[n].items():
            val = sign * c
            if val:
                mapped[n - 2 * k - 1] = val
        if mapped != ov.rows[n]:
            rep.failures.append({"n": n, "dt_mapped": mapped, "ov": ov.rows[n]})
    return rep
