"""Deterministic JSON/CSV emission for the invariant tables.

Identical inputs produce byte-identical files: keys are sorted, floats
never appear, CSV uses LF line endings and UTF-8.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction


def _jsonify(obj):
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return int(obj)
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    return obj


def json_bytes(obj) -> bytes:
    text = json.dumps(_jsonify(obj), sort_keys=True, indent=2)
    return (text + "\n").encode("utf-8")


def csv_bytes(rows) -> bytes:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue().encode("utf-8")


def half_string(two_x: int) -> str:
    """Render a doubled half-integer index as an explicit fraction string."""
    if two_x % 2 == 0:
        return str(two_x // 2)
    return f"{two_x}/2"


def emit(data: bytes, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        import sys

        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(out_path, "wb") as fh:
            fh.write(data)
