"""Property suites behind ``lmov verify-all`` and the acceptance tests.

Each suite returns a CheckReport; a theorem-level failure in any suite is
what the CLI maps to exit status 2.  Bounds are parameters so the same
code runs the quick CLI sweep and the full acceptance sweep.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from . import genus0, gwdt, onehole, twist
from .onehole import CheckReport
from .partitions import mn_character, partitions_of, permutation_count, z_factor
from .qa import LaurentQA, quantum_int, to_z_basis
from .series import CoeffRing, Series1, plethystic_exp, plethystic_log, series_exp, series_log


def check_disc_integrality(max_m: int, tau_range: range) -> CheckReport:
    rep = CheckReport("disc-integrality", {"max_m": max_m, "tau": list(tau_range)})
    for tau in tau_range:
        for m in range(1, max_m + 1):
            for l in range(0, m + 1):
                genus0.disc_n(m, l, tau)  # raises TheoremViolation on failure
    return rep


def check_disc_oracle(max_m: int, tau_range: range) -> CheckReport:
    rep = CheckReport("disc-series-oracle", {"max_m": max_m, "tau": list(tau_range)})
    for tau in tau_range:
        sub = genus0.disc_series_check(tau, max_m)
        rep.failures.extend({"tau": tau, **m} for m in sub.mismatches)
    return rep


def check_annulus(max_total: int, tau_range: range) -> CheckReport:
    rep = CheckReport("annulus", {"max_total": max_total, "tau": list(tau_range)})
    for tau in tau_range:
        for m1 in range(1, max_total):
            for m2 in range(1, max_total + 1 - m1):
                cmap = genus0.annulus_c(m1, m2, tau, order=max_total)
                top = cmap.get(m1 + m2, Fraction(0))
                want = genus0.annulus_top_closed_form(m1, m2, tau)
                if top != want:
                    rep.failures.append(
                        {"tau": tau, "m1": m1, "m2": m2, "got": top, "want": want}
                    )
                genus0.annulus_n(m1, m2, m1 + m2, tau, order=max_total)
        # the quadratic special value
        v, _ = genus0.annulus_n(1, 1, 2, tau, order=max_total)
        if v != tau * (tau + 1) // 2:
            rep.failures.append({"tau": tau, "n_(1,1)": v})
    return rep


def check_multihole(max_size: int, tau_range: range) -> CheckReport:
    rep = CheckReport("multihole", {"max_size": max_size, "tau": list(tau_range)})
    for tau in tau_range:
        for size in range(3, max_size + 1):
            for mu in partitions_of(size):
                if len(mu) < 3:
                    continue
                genus0.multihole_n(mu, tau)  # integer by construction
                if not genus0.multihole_cover_check(mu, tau):
                    rep.failures.append({"tau": tau, "mu": mu})
    return rep


def check_recursion(max_n: int, tau_range: range) -> CheckReport:
    rep = CheckReport("row-recursion", {"max_n": max_n, "tau": list(tau_range)})
    for tau in tau_range:
        sub = onehole.verify_recursion(tau, max_n)
        rep.failures.extend({"tau": tau, **f} for f in sub.failures)
    return rep


def check_onehole_chain(max_m: int, tau_range: range) -> CheckReport:
    """Cleared-sum integrality, exact divisibility, z^2 membership, and
    integer tables, plus the pinned m = 1 table."""
    rep = CheckReport("one-hole-chain", {"max_m": max_m, "tau": list(tau_range)})
    for tau in tau_range:
        for m in range(1, max_m + 1):
            cleared = onehole.cal_z_cleared(m, tau)
            if not cleared.is_integral():
                rep.failures.append({"tau": tau, "m": m, "reason": "cleared not integral"})
            f = onehole.z2_g_m(m, tau)  # divisibility (raises on violation)
            if f != f.mirror_q():
                rep.failures.append({"tau": tau, "m": m, "reason": "not q-symmetric"})
            table = onehole.lmov_one_hole(m, tau)  # z-basis + integrality
            if m == 1:
                s = (-1) ** (tau % 2)
                if table.entries() != {(0, 1): s, (0, -1): -s}:
                    rep.failures.append({"tau": tau, "reason": "m=1 table wrong"})
    return rep


def check_gaussian_form(max_m: int, tau_range: range) -> CheckReport:
    rep = CheckReport("gaussian-closed-form", {"max_m": max_m, "tau": list(tau_range)})
    for tau in tau_range:
        if tau < 1:
            raise ValueError("gaussian closed form needs tau >= 1")
        for m in range(1, max_m + 1):
            if onehole.cal_z_gaussian(m, tau) != onehole.cal_z_cleared(m, tau):
                rep.failures.append({"tau": tau, "m": m})
    return rep


def check_general_partition(max_size: int, tau_range: range) -> CheckReport:
    """Conjecture-level sweep: integral tables for every partition."""
    rep = CheckReport("general-partition", {"max_size": max_size, "tau": list(tau_range)})
    for tau in tau_range:
        for size in range(1, max_size + 1):
            for mu in partitions_of(size):
                r = onehole.g_mu_general(mu, tau)
                rep.failures.extend(
                    {"tau": tau, **f} for f in r.report.failures
                )
    return rep


def check_gwdt_identity(order: int, tau_range: range) -> CheckReport:
    rep = CheckReport("gwdt-identity", {"order": order, "tau": list(tau_range)})
    for tau in tau_range:
        sub = gwdt.gwdt_check(tau, order)
        rep.failures.extend({"tau": tau, **f} for f in sub.failures)
    return rep


def check_dt(max_loops: int, max_n: int) -> CheckReport:
    rep = CheckReport("dt-extraction", {"max_loops": max_loops, "max_n": max_n})
    for loops in range(1, max_loops + 1):
        table = gwdt.dt_extract(loops, max_n)  # raises on any violation
        if table.rows[1] != {0: 1}:
            rep.failures.append({"loops": loops, "reason": "c_(1,0) != 1"})
    return rep


def check_ov(max_m: int, tau_range: range) -> CheckReport:
    rep = CheckReport("ov-extraction", {"max_m": max_m, "tau": list(tau_range)})
    for tau in tau_range:
        table = gwdt.ooguri_vafa(tau, max_m, reconstruct=True)
        rep.failures.extend({"tau": tau, **f} for f in table.report.failures)
        want = {0: (-1) ** (tau % 2)}
        if table.rows[1] != want:
            rep.failures.append({"tau": tau, "N_1": table.rows[1], "want": want})
        if tau <= -1:
            sub = gwdt.ov_dt_shift_check(tau, min(max_m, 6))
            rep.failures.extend({"tau": tau, **f} for f in sub.failures)
    return rep


def check_twist(p_values: list, max_r: int) -> CheckReport:
    rep = CheckReport("twist-integrality", {"p": p_values, "max_r": max_r})
    for p in p_values:
        for r in range(1, max_r + 1):
            twist.b_minus(p, r)
            twist.b_plus(p, r)
    return rep


def _random_symmetric_laurent(rng: random.Random) -> LaurentQA:
    # random element of Q[z^2, a^(+-1/2)], symmetric under q <-> 1/q
    out = LaurentQA.zero()
    z2 = quantum_int(1) * quantum_int(1)
    for _ in range(rng.randint(1, 6)):
        g = rng.randint(0, 4)
        v = rng.randint(-3, 3)
        c = rng.randint(-9, 9)
        if c:
            out = out + (z2 ** g).scale(c).shift(dv=v)
    return out


def check_infrastructure(max_n: int, samples: int, seed: int) -> CheckReport:
    """Character orthogonality, z-basis round trip, plethystic round trip."""
    rep = CheckReport(
        "infrastructure", {"max_n": max_n, "samples": samples, "seed": seed}
    )
    # first and second orthogonality
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for lam in parts:
            for lam2 in parts:
                s = sum(
                    Fraction(mn_character(lam, mu) * mn_character(lam2, mu), z_factor(mu))
                    for mu in parts
                )
                if s != (1 if lam == lam2 else 0):
                    rep.failures.append({"orthogonality": (lam, lam2)})
        for mu in parts:
            for nu in parts:
                s = sum(
                    Fraction(mn_character(lam, mu) * mn_character(lam, nu), z_factor(mu))
                    for lam in parts
                )
                if s != (1 if mu == nu else 0):
                    rep.failures.append({"second-orthogonality": (mu, nu)})
        for mu in parts:
            if z_factor(mu) * permutation_count(mu) != factorial(n):
                rep.failures.append({"z-count": mu})
    # z-basis round trip on random symmetric inputs
    rng = random.Random(seed)
    for _ in range(samples):
        f = _random_symmetric_laurent(rng)
        if to_z_basis(f).expand() != f:
            rep.failures.append({"z-roundtrip": repr(f)})
    # plethystic log/exp round trip at order 12 over LaurentQA coefficients
    ring = CoeffRing(zero=LaurentQA.zero(), one=LaurentQA.one())
    order = 12
    coeffs = [LaurentQA.one()]
    for n in range(1, order + 1):
        d = {}
        for _ in range(3):
            d[(rng.randint(-4, 4), rng.randint(-2, 2) * 2)] = rng.randint(-5, 5)
        coeffs.append(LaurentQA(d))
    z = Series1(ring, order, coeffs)
    fs = plethystic_log(z)
    if plethystic_exp(fs, ring, order) != z:
        rep.failures.append({"plethystic-roundtrip": "mismatch"})
    logz = series_log(z)
    if series_exp(logz) != z:
        rep.failures.append({"log-exp-roundtrip": "mismatch"})
    return rep


QUICK = {
    "disc": dict(max_m=12, tau_range=range(-3, 4)),
    "disc_oracle": dict(max_m=6, tau_range=range(-2, 3)),
    "annulus": dict(max_total=8, tau_range=range(-3, 4)),
    "multihole": dict(max_size=6, tau_range=range(-2, 3)),
    "recursion": dict(max_n=20, tau_range=range(-2, 3)),
    "onehole": dict(max_m=4, tau_range=range(-2, 3)),
    "gaussian": dict(max_m=4, tau_range=range(1, 3)),
    "general": dict(max_size=3, tau_range=range(-1, 2)),
    "gwdt": dict(order=8, tau_range=range(-3, 0)),
    "dt": dict(max_loops=3, max_n=4),
    "ov": dict(max_m=5, tau_range=range(-2, 3)),
    "twist": dict(p_values=[-3, -2, -1, 2, 3], max_r=12),
    "infra": dict(max_n=5, samples=40),
}

FULL = {
    "disc": dict(max_m=40, tau_range=range(-8, 9)),
    "disc_oracle": dict(max_m=12, tau_range=range(-4, 5)),
    "annulus": dict(max_total=16, tau_range=range(-6, 7)),
    "multihole": dict(max_size=10, tau_range=range(-5, 6)),
    "recursion": dict(max_n=50, tau_range=range(-5, 6)),
    "onehole": dict(max_m=8, tau_range=range(-5, 6)),
    "gaussian": dict(max_m=8, tau_range=range(1, 5)),
    "general": dict(max_size=5, tau_range=range(-3, 4)),
    "gwdt": dict(order=12, tau_range=range(-5, 0)),
    "dt": dict(max_loops=5, max_n=6),
    "ov": dict(max_m=8, tau_range=range(-5, 6)),
    "twist": dict(p_values=[-6, -5, -4, -3, -2, -1, 2, 3, 4, 5, 6], max_r=40),
    "infra": dict(max_n=7, samples=200),
}


def run_all(bounds: dict, seed: int = 0):
    """Run every suite; yields CheckReports in a fixed order."""
    yield check_disc_integrality(**bounds["disc"])
    yield check_disc_oracle(**bounds["disc_oracle"])
    yield check_annulus(**bounds["annulus"])
    yield check_multihole(**bounds["multihole"])
    yield check_recursion(**bounds["recursion"])
    yield check_onehole_chain(**bounds["onehole"])
    yield check_gaussian_form(**bounds["gaussian"])
    yield check_general_partition(**bounds["general"])
    yield check_gwdt_identity(**bounds["gwdt"])
    yield check_dt(**bounds["dt"])
    yield check_ov(**bounds["ov"])
    yield check_twist(**bounds["twist"])
    yield check_infrastructure(seed=seed, **bounds["infra"])
