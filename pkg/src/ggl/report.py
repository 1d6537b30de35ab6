"""Report serialization: CSV and JSON tables with stable bytes.

Rows are ordered dicts (column -> int | float | str) with a fixed column
set per command.  Floats are written in their shortest round-trip form,
line endings are always "\\n", and nothing time- or locale-dependent is
emitted, so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import sys

FORMATS = ("csv", "json")


def format_value(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean report values are not supported")
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    # numpy scalars and friends: go through float for round-trip repr
    return repr(float(value))


def render_csv(rows) -> str:
    rows = list(rows)
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        if list(row.keys()) != list(rows[0].keys()):
            raise ValueError("inconsistent columns across rows")
        writer.writerow([format_value(v) for v in row.values()])
    return buf.getvalue()


def render_json(rows) -> str:
    rows = [dict(r) for r in rows]
    # json emits floats in shortest round-trip form already
    return json.dumps(rows, indent=2) + "\n"


def render(rows, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "json":
        return render_json(rows)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def write_report(rows, fmt: str, path: str | None) -> None:
    """Render rows and write to path, or stdout when path is None or '-'."""
    text = render(rows, fmt)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
