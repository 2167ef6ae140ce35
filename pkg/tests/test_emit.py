import csv
import io
import json

import pytest

from hesslab.emit import Grid, csv_cell, emit, latex_cell
from hesslab.qlaurent import ZERO, parse_qpoly
from hesslab.verify import verify_b3


def test_cells():
    p = parse_qpoly("[2][4][6]")
    assert latex_cell(p) == "[2][4][6]"
    assert latex_cell(ZERO) == ""
    assert csv_cell(ZERO) == "0"
    assert csv_cell(parse_qpoly("1+3q")) == "1+3q"
    assert parse_qpoly(csv_cell(p)) == p


def test_grid_formats():
    g = Grid("t", ["a", "b"], row_header="r")
    g.add("x", [parse_qpoly("[2]"), ZERO])
    rows = list(csv.reader(io.StringIO(emit(g, "csv"))))
    assert rows == [["r", "a", "b"], ["x", "1+q", "0"]]
    tex = emit(g, "latex")
    assert r"\begin{tabular}" in tex and "$[2]$ &  \\\\" in tex
    assert json.loads(emit(g, "json"))["rows"][0]["cells"] == {"a": "1+q", "b": "0"}
    with pytest.raises(ValueError):
        emit(g, "xml")


def test_golden_roundtrip_csv(tables):
    t1, _ = tables
    rows = list(csv.reader(io.StringIO(emit(t1, "csv"))))
    assert rows[0][1:] == t1.columns
    for (label, *cells), r in zip(rows[1:], t1.rows):
        assert label.split()[0].rstrip("*") == str(r)
        assert [parse_qpoly(c) for c in cells] == [t1.cell(r, c) for c in t1.columns]


def test_golden_latex_epsilon(tables):
    tex = emit(tables[0], "latex")
    assert r"[3^2,1], \epsilon" in tex


def test_report_formats(tables):
    rep = verify_b3(tables)
    d = json.loads(emit(rep, "json"))
    assert d["ok"] and "runtime" not in d["checks"][0]
    assert emit(rep, "latex").startswith("% " + rep.header)
    assert "erratum table2:1:(1),(2)" in emit(rep, "csv")


def test_plain_objects_json_only():
    assert json.loads(emit({"x": parse_qpoly("q")}, "json")) == {"x": "q"}
    with pytest.raises(ValueError):
        emit({"x": 1}, "csv")
