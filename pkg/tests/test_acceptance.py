"""Acceptance suite: every criterion at its full stated bounds.

All arithmetic is exact, so every check is zero-tolerance; each test
prints one PASS line (with its wall time) once its criterion holds.
Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import time

from lmov import verify
from lmov.cli import EXIT_OK, main


def _report(number, label, rep, t0):
    dt = time.time() - t0
    status = "PASS" if rep.ok else "FAIL"
    print(f"{status}  criterion {number:>2}: {label}  [{dt:.1f}s]")
    assert rep.ok, (label, rep.failures[:5])


def test_criterion_01_disc_integrality():
    t0 = time.time()
    rep = verify.check_disc_integrality(max_m=40, tau_range=range(-8, 9))
    _report(1, "disc integrality m<=40, tau in [-8,8]", rep, t0)


def test_criterion_02_disc_oracle():
    t0 = time.time()
    rep = verify.check_disc_oracle(max_m=12, tau_range=range(-4, 5))
    _report(2, "disc series oracle m<=12, tau in [-4,4]", rep, t0)


def test_criterion_03_annulus():
    t0 = time.time()
    rep = verify.check_annulus(max_total=16, tau_range=range(-6, 7))
    _report(3, "annulus closed form + integrality m1+m2<=16, tau in [-6,6]", rep, t0)


def test_criterion_04_multihole():
    t0 = time.time()
    rep = verify.check_multihole(max_size=10, tau_range=range(-5, 6))
    _report(4, "multi-hole integrality + cover consistency |mu|<=10", rep, t0)


def test_criterion_05_recursion():
    t0 = time.time()
    rep = verify.check_recursion(max_n=50, tau_range=range(-5, 6))
    _report(5, "row recursion n<=50, tau in [-5,5]", rep, t0)


def test_criterion_06_one_hole_chain():
    t0 = time.time()
    rep = verify.check_onehole_chain(max_m=8, tau_range=range(-5, 6))
    _report(6, "one-hole chain m<=8, tau in [-5,5]", rep, t0)


def test_criterion_07_gaussian_closed_form():
    t0 = time.time()
    rep = verify.check_gaussian_form(max_m=8, tau_range=range(1, 5))
    _report(7, "Gaussian-binomial closed form tau in [1,4], m<=8", rep, t0)


def test_criterion_08_general_partition():
    t0 = time.time()
    rep = verify.check_general_partition(max_size=5, tau_range=range(-3, 4))
    _report(8, "general-partition tables |mu|<=5, tau in [-3,3]", rep, t0)


def test_criterion_09_gwdt_identity():
    t0 = time.time()
    rep = verify.check_gwdt_identity(order=12, tau_range=range(-5, 0))
    _report(9, "GW/DT series identity tau in [-5,-1], order 12", rep, t0)


def test_criterion_10_dt_extraction():
    t0 = time.time()
    rep = verify.check_dt(max_loops=5, max_n=6)
    _report(10, "DT extraction loops<=5, n<=6", rep, t0)


def test_criterion_11_ov_extraction():
    t0 = time.time()
    rep = verify.check_ov(max_m=8, tau_range=range(-5, 6))
    _report(11, "OV extraction + reconstruction m<=8, tau in [-5,5]", rep, t0)


def test_criterion_12_twist():
    t0 = time.time()
    rep = verify.check_twist(
        p_values=[-6, -5, -4, -3, -2, -1, 2, 3, 4, 5, 6], max_r=40
    )
    _report(12, "twist-knot integrality p in [-6,-1]u[2,6], r<=40", rep, t0)


def test_criterion_13_infrastructure(tmp_path):
    t0 = time.time()
    rep = verify.check_infrastructure(max_n=7, samples=200, seed=20240801)
    # deterministic CLI output is part of the infrastructure criterion
    for argv in (
        ["disc", "--tau", "-2", "--max-m", "10", "--format", "csv"],
        ["onehole", "--tau", "2", "--max-m", "4"],
        ["ov", "--tau", "-3", "--max-m", "5"],
    ):
        a, b = tmp_path / "a", tmp_path / "b"
        assert main(argv + ["--out", str(a)]) == EXIT_OK
        assert main(argv + ["--out", str(b)]) == EXIT_OK
        if a.read_bytes() != b.read_bytes():
            rep.failures.append({"cli-determinism": argv})
    _report(13, "infrastructure: orthogonality, round trips, CLI determinism", rep, t0)
