"""Golden B3 tables shipped as JSON, with the id <-> minimal-root join checked
against the enumerated ideals."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .idealkit import Ideal, enumerate_ideals, ideal_key
from .qlaurent import ZERO, QPoly, parse_qpoly
from .rootcore import RootSystem, build_root_system, parse_system

DATA_DIR = Path(__file__).with_name("data")


class GoldenSchemaError(ValueError):
    pass


def data_dir(override: str | os.PathLike | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("HESSLAB_DATA")
    return Path(env) if env else DATA_DIR


def parse_column(kind: str, label: str):
    """Column label to a hashable key: ``(orbit, local)`` or a bipartition."""
    if kind == "f_vector":
        left, right = label.split("),(")
        part = lambda s: tuple(int(x) for x in s.strip("()").split(",") if x)
        return (part(left), part(right))
    orbit, _, local = label.partition("],")
    orbit = orbit.strip("[]")
    parts: list[int] = []
    for tok in orbit.split(","):
        base, _, exp = tok.partition("^")
        parts.extend([int(base)] * int(exp or 1))
    return (tuple(parts), local or "1")


@dataclass
class Erratum:
    row: int
    column: str
    printed: QPoly
    computed: QPoly
    reason: str = ""


@dataclass
class GoldenTable:
    system: str
    kind: str
    law: str
    columns: list[str]
    rows: list[int]
    min_roots: dict[int, tuple[str, ...]]
    star: dict[int, bool]
    orbit: dict[int, str]
    printed: dict[tuple[int, str], QPoly]
    errata: list[Erratum] = field(default_factory=list)
    ideal: dict[int, Ideal] = field(default_factory=dict)
    raw: dict[tuple[int, str], str] = field(default_factory=dict)

    def cell(self, row: int, col: str, corrected: bool = True) -> QPoly:
        if corrected:
            for e in self.errata:
                if e.row == row and e.column == col:
                    return e.computed
        return self.printed.get((row, col), ZERO)

    def column(self, col: str, corrected: bool = True) -> dict[int, QPoly]:
        return {r: self.cell(r, col, corrected) for r in self.rows}

    def is_erratum(self, row: int, col: str) -> bool:
        return any(e.row == row and e.column == col for e in self.errata)

    def column_key(self, col: str):
        return parse_column(self.kind, col)

    def id_of_mask(self) -> dict[int, int]:
        return {I.mask: r for r, I in self.ideal.items()}

    def starred(self) -> list[int]:
        return [r for r in self.rows if self.star.get(r)]


def _join(rs: RootSystem, table: GoldenTable) -> None:
    by_key = {ideal_key(rs, I): I for I in enumerate_ideals(rs)}
    seen = set()
    for r in table.rows:
        key = tuple(sorted(table.min_roots[r]))
        if key not in by_key:
            raise GoldenSchemaError(f"row {r}: minimal roots {key} do not form an ideal of {table.system}")
        I = by_key[key]
        if I.mask in seen:
            raise GoldenSchemaError(f"row {r}: ideal listed twice")
        seen.add(I.mask)
        table.ideal[r] = I
    if len(seen) != len(by_key):
        raise GoldenSchemaError(f"{len(by_key) - len(seen)} ideals of {table.system} have no row")


def parse_golden(obj: dict) -> GoldenTable:
    for k in ("system", "kind", "columns", "rows"):
        if k not in obj:
            raise GoldenSchemaError(f"missing key {k!r}")
    cols = list(obj["columns"])
    rows, mins, star, orbit, printed, raw = [], {}, {}, {}, {}, {}
    for row in obj["rows"]:
        r = int(row["id"])
        if r in mins:
            raise GoldenSchemaError(f"duplicate id {r}")
        rows.append(r)
        mins[r] = tuple(row["min_roots"])
        star[r] = bool(row.get("star", False))
        orbit[r] = row.get("orbit", "")
        for c, text in row.get("cells", {}).items():
            if c not in cols:
                raise GoldenSchemaError(f"row {r}: unknown column {c!r}")
            raw[(r, c)] = text
            try:
                printed[(r, c)] = parse_qpoly(text)
            except ValueError as exc:
                raise GoldenSchemaError(f"row {r}, column {c}: {exc}") from None
    errata = []
    for e in obj.get("errata", []):
        errata.append(Erratum(int(e["row"]), e["column"], parse_qpoly(e["printed"]),
                              parse_qpoly(e["computed"]), e.get("reason", "")))
        if printed.get((errata[-1].row, errata[-1].column), ZERO) != errata[-1].printed:
            raise GoldenSchemaError(f"erratum at {e['row']}/{e['column']} does not match the printed cell")
    return GoldenTable(obj["system"], obj["kind"], obj.get("law", ""), cols, rows, mins, star,
                       orbit, printed, errata, raw=raw)


def load_golden(path: str | os.PathLike, rs: RootSystem | None = None) -> GoldenTable:
    with open(path) as fh:
        table = parse_golden(json.load(fh))
    rs = rs or build_root_system(*parse_system(table.system))
    _join(rs, table)
    return table


def load_b3(data: str | os.PathLike | None = None) -> tuple[GoldenTable, GoldenTable]:
    d = data_dir(data)
    rs = build_root_system("B", 3)
    return load_golden(d / "b3_table1.json", rs), load_golden(d / "b3_table2.json", rs)
