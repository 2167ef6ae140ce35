import json

import pytest

from hesslab.golden import GoldenSchemaError, DATA_DIR, load_golden, parse_column, parse_golden
from hesslab.qlaurent import ZERO, parse_qpoly, q


def test_cell_parsing(tables):
    t1, t2 = tables
    assert len(t1.rows) == len(t2.rows) == 20
    assert len(t1.columns) == len(t2.columns) == 10
    # a blank cell is zero
    assert t1.cell(20, "[7]") == ZERO
    assert parse_qpoly("q^3[2][2]") == q ** 3 * (1 + q) ** 2


def test_zero_ideal_row(tables):
    t1, _ = tables
    nz = [c for c in t1.columns if t1.cell(20, c)]
    assert nz == ["[1^7]"]


def test_errata_applied(tables):
    t1, t2 = tables
    assert t2.cell(1, "(1),(2)", corrected=False) == parse_qpoly("2")
    assert t2.cell(1, "(1),(2)") == parse_qpoly("3")
    assert t1.cell(3, "[1^7]", corrected=False) == ZERO
    assert t1.cell(3, "[1^7]") == parse_qpoly("[2][4][6]")
    assert t1.is_erratum(3, "[1^7]") and not t1.is_erratum(3, "[7]")


def test_join_ids(tables, b3):
    t1, t2 = tables
    assert t1.id_of_mask() == t2.id_of_mask()
    assert t1.ideal[20].size == 0
    assert t1.ideal[1].size == b3.N


def test_column_keys():
    assert parse_column("fiber_poincare", "[3^2,1],eps") == ((3, 3, 1), "eps")
    assert parse_column("fiber_poincare", "[7]") == ((7,), "1")
    assert parse_column("f_vector", "(1),(1,1)") == ((1,), (1, 1))
    assert parse_column("f_vector", "(),(3)") == ((), (3,))


def _raw():
    return json.loads((DATA_DIR / "b3_table2.json").read_text())


def test_schema_errors(tmp_path):
    obj = _raw()
    del obj["columns"]
    with pytest.raises(GoldenSchemaError):
        parse_golden(obj)

    obj = _raw()
    obj["rows"][0]["cells"]["bogus"] = "1"
    with pytest.raises(GoldenSchemaError):
        parse_golden(obj)

    obj = _raw()
    obj["rows"][0]["cells"][obj["columns"][0]] = "q^^2"
    with pytest.raises(GoldenSchemaError):
        parse_golden(obj)

    obj = _raw()
    obj["rows"][1]["min_roots"] = obj["rows"][0]["min_roots"]
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(obj))
    with pytest.raises(GoldenSchemaError):
        load_golden(path)

    obj = _raw()
    obj["rows"][0]["min_roots"] = ["100", "110"]   # not an antichain
    path.write_text(json.dumps(obj))
    with pytest.raises(GoldenSchemaError):
        load_golden(path)
