"""Deterministic CSV / JSON tables of constants, bounds and bound widths."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bounds, ramanujan
from .constants import REGISTRY
from .errors import ParameterError

WHATS = ("constants", "bounds", "errors")
FORMATS = ("csv", "json")


def fmt(v) -> str:
    """17 significant digits: enough to round-trip any binary64."""
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


@dataclass(frozen=True)
class GridSpec:
    """``points`` uniform x values from ``start`` to ``stop`` inclusive, inside (0, 1/2]."""

    start: float
    stop: float
    points: int

    def __post_init__(self):
        if int(self.points) != self.points or self.points < 1:
            raise ParameterError("points must be a positive integer")
        if not (0.0 < self.start <= 0.5 and 0.0 < self.stop <= 0.5):
            raise ParameterError("grid must lie in (0, 1/2]")
        if self.start > self.stop or (self.points > 1 and self.start == self.stop):
            raise ParameterError("need start < stop (or start == stop with one point)")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.points))


def _method_columns(n: int):
    return [
        ("sine_poly", lambda x: bounds.bound_sine_poly(x)),
        (f"origin_poly({n})", lambda x: bounds.bound_origin_poly(n, x)),
        (f"center_poly({n})", lambda x: bounds.bound_center_poly(n, x)),
        ("multiplicative", lambda x: bounds.bound_multiplicative(x)),
        ("additive", lambda x: bounds.bound_additive(x)),
        (f"envelope({n})", lambda x: bounds.bound_envelope(n, x)),
    ]


def constants_rows() -> tuple[list[str], list[list]]:
    """Long format: for each constant one ``computed`` and one ``printed`` row."""
    header = ["name", "source", "value"]
    rows = []
    for c in REGISTRY:
        rows.append([c.name, "computed", fmt(c.compute())])
        rows.append([c.name, "printed", c.printed])
    return header, rows


def bounds_rows(grid: GridSpec, n: int = 2) -> tuple[list[str], list[list]]:
    xs = grid.values()
    R, _ = ramanujan.R_values(xs)
    header = ["x", "R"]
    cols = [xs, R]
    for name, fn in _method_columns(n):
        bp = fn(xs)
        header += [f"{name}:lower", f"{name}:upper"]
        cols += [np.asarray(bp.lower), np.asarray(bp.upper)]
    rows = [[fmt(c[i]) for c in cols] for i in range(len(xs))]
    return header, rows


def errors_rows(grid: GridSpec, orders=(0, 1, 2, 3)) -> tuple[list[str], list[list]]:
    """Bound widths upper - lower; the order-dependent methods appear once per order."""
    xs = grid.values()
    header = ["x"]
    cols = [xs]
    methods = [("sine_poly", bounds.bound_sine_poly(xs))]
    methods += [(f"origin_poly({n})", bounds.bound_origin_poly(n, xs)) for n in orders if n >= 1]
    methods += [(f"center_poly({n})", bounds.bound_center_poly(n, xs)) for n in orders]
    methods += [("multiplicative", bounds.bound_multiplicative(xs)), ("additive", bounds.bound_additive(xs))]
    methods += [(f"envelope({n})", bounds.bound_envelope(n, xs)) for n in orders if n >= 1]
    for name, bp in methods:
        header.append(name)
        cols.append(np.asarray(bp.gap))
    rows = [[fmt(c[i]) for c in cols] for i in range(len(xs))]
    return header, rows


def build_rows(what: str, grid: GridSpec | None = None, n: int = 2):
    if what == "constants":
        return constants_rows()
    if grid is None:
        raise ParameterError(f"{what} table needs a grid")
    if what == "bounds":
        return bounds_rows(grid, n)
    if what == "errors":
        return errors_rows(grid)
    raise ParameterError(f"unknown table {what!r}; expected one of {WHATS}")


def render(what: str, header, rows, fmt_name: str, meta: dict | None = None) -> str:
    if fmt_name == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt_name == "json":
        doc = {
            "meta": {"what": what, "columns": list(header), **(meta or {})},
            "rows": [dict(zip(header, r)) for r in rows],
        }
        return json.dumps(doc, indent=1, sort_keys=False) + "\n"
    raise ParameterError(f"unknown format {fmt_name!r}; expected one of {FORMATS}")


def emit_table(what: str, grid: GridSpec | None, fmt_name: str, out: str | Path | None, n: int = 2) -> str:
    """Build a table and write it to ``out`` (or just return the text when out is None).

    Numbers are written as strings with 17 significant digits so CSV and JSON
    carry identical, byte-stable values.
    """
    if fmt_name not in FORMATS:
        raise ParameterError(f"unknown format {fmt_name!r}; expected one of {FORMATS}")
    header, rows = build_rows(what, grid, n)
    meta = {}
    if grid is not None and what != "constants":
        meta = {"from": fmt(grid.start), "to": fmt(grid.stop), "points": int(grid.points)}
    text = render(what, header, rows, fmt_name, meta)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    return text
