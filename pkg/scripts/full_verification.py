#!/usr/bin/env python3
"""Run every property suite at full acceptance bounds and time each.

Equivalent to ``lmov verify-all`` (full bounds) but with per-suite wall
times, handy when profiling the exact-arithmetic kernels.
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from lmov import verify  # noqa: E402


def run() -> int:
    exit_code = 0
    t_total = time.time()
    gen = verify.run_all(verify.FULL, seed=0)
    while True:
        t0 = time.time()
        try:
            rep = next(gen)  # the suite runs inside next()
        except StopIteration:
            break
        status = "PASS" if rep.ok else "FAIL"
        print(f"{status}  {rep.name}  [{time.time() - t0:.1f}s]")
        if not rep.ok:
            exit_code = 2
            for f in rep.failures[:5]:
                print(f"      {f}")
    print(f"total: {time.time() - t_total:.1f}s")
    return exit_code


if __name__ == "__main__":
    raise SystemExit(run())
