"""Report emitters. JSON keeps a stable key order; CSV and LaTeX use q-number notation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .golden import GoldenTable
from .qlaurent import QPoly, format_expanded, format_qnumber
from .verify import VerifyReport

FORMATS = ("json", "csv", "latex")


@dataclass
class Grid:
    """A labelled table of cells (QPoly or plain values)."""

    title: str
    columns: list[str]
    rows: list[tuple[str, list[Any]]] = field(default_factory=list)
    row_header: str = ""

    def add(self, label: str, cells: list[Any]) -> None:
        self.rows.append((label, cells))


def csv_cell(v) -> str:
    if isinstance(v, QPoly):
        return format_expanded(v)
    return str(v)


def latex_cell(v) -> str:
    if isinstance(v, QPoly):
        return format_qnumber(v) if v else ""
    return str(v)


def _json_cell(v):
    if isinstance(v, QPoly):
        return format_expanded(v)
    return v


def golden_grid(t: GoldenTable, corrected: bool = True) -> Grid:
    g = Grid(f"{t.system} {t.kind}", list(t.columns), row_header="ideal")
    for r in t.rows:
        label = f"{r}{'*' if t.star.get(r) else ''} " + (",".join(t.min_roots[r]) or "0")
        g.add(label, [t.cell(r, c, corrected) for c in t.columns])
    return g


def _grid_json(g: Grid) -> str:
    obj = {"title": g.title, "columns": g.columns,
           "rows": [{"label": lab, "cells": {c: _json_cell(v) for c, v in zip(g.columns, cells)}}
                    for lab, cells in g.rows]}
    return json.dumps(obj, indent=1, sort_keys=True)


def _grid_csv(g: Grid) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([g.row_header] + g.columns)
    for lab, cells in g.rows:
        w.writerow([lab] + [csv_cell(v) for v in cells])
    return buf.getvalue()


def _tex_escape(s: str) -> str:
    return s.replace("_", r"\_").replace("&", r"\&").replace("#", r"\#")


def _math(s: str) -> str:
    if not s:
        return ""
    return "$" + s.replace(",eps", r", \epsilon") + "$"


def _grid_latex(g: Grid) -> str:
    spec = "|" + "c|" * (len(g.columns) + 1)
    lines = [rf"\begin{{tabular}}{{{spec}}}", r"\hline",
             " & ".join([_tex_escape(g.row_header)] + [_math(c) for c in g.columns]) + r" \\",
             r"\hline"]
    for lab, cells in g.rows:
        lines.append(" & ".join([_tex_escape(lab)] + [_math(latex_cell(v)) for v in cells]) + r" \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def _report_grid(rep: VerifyReport) -> Grid:
    g = Grid(rep.title, ["status", "name", "detail"], row_header="check")
    for c in rep.checks:
        g.add(c.id, ["pass" if c.passed else "FAIL", c.name, c.detail])
    for e in rep.errata:
        g.add(f"erratum {e['table']}:{e['row']}:{e['column']}",
              [e["status"], f"printed {e['printed']}", f"computed {e['computed']}"])
    return g


def emit(obj, fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    if isinstance(obj, VerifyReport):
        if fmt == "json":
            return obj.to_json(timings=False) + "\n"
        text = (_grid_csv if fmt == "csv" else _grid_latex)(_report_grid(obj))
        if fmt == "latex":
            text = "% " + obj.header + "\n" + text
        return text
    if isinstance(obj, GoldenTable):
        obj = golden_grid(obj)
    if isinstance(obj, Grid):
        return {"json": _grid_json, "csv": _grid_csv, "latex": _grid_latex}[fmt](obj) + ("\n" if fmt == "json" else "")
    if fmt != "json":
        raise ValueError(f"{type(obj).__name__} can only be emitted as json")
    return json.dumps(obj, indent=1, sort_keys=True, default=_json_default) + "\n"


def _json_default(v):
    if isinstance(v, QPoly):
        return format_expanded(v)
    if hasattr(v, "to_json"):
        return v.to_json()
    raise TypeError(f"cannot serialise {type(v).__name__}")
