#!/usr/bin/env python3
"""Regenerate the standard invariant tables into out/tables/.

Produces, for a small framing sweep, the disc / annulus / multi-hole /
one-hole tables plus the Ooguri-Vafa, Donaldson-Thomas and twist-knot
tables, in both JSON and CSV.  Everything is deterministic, so the files
are stable across runs and machines.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from lmov.cli import main  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parent.parent / "out" / "tables"

JOBS = [
    ["disc", "--tau", "{tau}", "--max-m", "12"],
    ["annulus", "--tau", "{tau}", "--max-total", "8"],
    ["multihole", "--tau", "{tau}", "--max-size", "8"],
    ["onehole", "--tau", "{tau}", "--max-m", "6"],
    ["ov", "--tau", "{tau}", "--max-m", "8"],
]

FIXED = [
    ["dt", "--loops", "1", "--max-n", "6"],
    ["dt", "--loops", "2", "--max-n", "6"],
    ["dt", "--loops", "3", "--max-n", "6"],
    ["twist", "--p-min", "-6", "--p-max", "6", "--max-r", "20"],
]


def run() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for tau in (-3, -2, -1, 0, 1, 2, 3):
        for template in JOBS:
            argv = [a.format(tau=tau) for a in template]
            stem = f"{argv[0]}_tau{tau}"
            for fmt in ("json", "csv"):
                path = OUT / f"{stem}.{fmt}"
                code = main(argv + ["--format", fmt, "--out", str(path)])
                if code != 0:
                    raise SystemExit(f"{argv} failed with exit code {code}")
                print(f"wrote {path}")
    for argv in FIXED:
        stem = "_".join(argv).replace("--", "").replace(" ", "")
        for fmt in ("json", "csv"):
            path = OUT / f"{stem}.{fmt}"
            code = main(argv + ["--format", fmt, "--out", str(path)])
            if code != 0:
                raise SystemExit(f"{argv} failed with exit code {code}")
            print(f"wrote {path}")


if __name__ == "__main__":
    run()
