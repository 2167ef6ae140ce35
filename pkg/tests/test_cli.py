import json

import pytest

from hesslab.cli import main
from hesslab.qlaurent import parse_qpoly


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_ideals_count(capsys):
    rc, out, _ = run(capsys, "ideals", "--system", "B3")
    assert rc == 0 and len(json.loads(out)) == 20
    rc, out, _ = run(capsys, "ideals", "--system", "A3")
    assert rc == 0 and len(json.loads(out)) == 14


def test_triples_b3(capsys):
    rc, out, _ = run(capsys, "triples")
    ids = sorted(tuple(t["ids"]) for t in json.loads(out))
    assert rc == 0 and len(ids) == 10


def test_csf_e_basis(capsys):
    rc, out, _ = run(capsys, "csf", "--hess", "2,3,3", "--basis", "e", "--csv")
    assert rc == 0
    header, row = out.strip().splitlines()
    cells = dict(zip(header.split(",")[1:], row.split(",")[1:]))
    assert parse_qpoly(cells["3"]) == parse_qpoly("[3]")


def test_decompose_matches_table(capsys, tables):
    t1, _ = tables
    rc, out, _ = run(capsys, "decompose", "--orbit", "3,2,2", "--ideal", "110,012", "--chi", "[3,2^2]")
    d = json.loads(out)
    assert rc == 0 and d["ideal"]["id"] == 10
    assert parse_qpoly(d["poincare"]) == t1.cell(10, "[3,2^2]")


def test_verify_b3_exit_zero(capsys):
    rc, out, _ = run(capsys, "verify-b3", "--jobs", "2")
    assert rc == 0 and json.loads(out)["ok"]


def test_check_law_flags_fault(capsys, tmp_path, tables):
    _, t2 = tables
    col = "(1),(1,1)"
    vals = {",".join(t2.min_roots[r]) or "0": str(t2.raw.get((r, col), "")) or "0" for r in t2.rows}
    fam = {"system": "B3", "kind": "second_kind", "values": vals}
    path = tmp_path / "fam.json"
    path.write_text(json.dumps(fam))
    rc, out, _ = run(capsys, "check-law", "--family", str(path))
    assert rc == 0 and json.loads(out)["violations"] == []
    key = ",".join(t2.min_roots[15])
    vals[key] = str(parse_qpoly(vals[key]) + parse_qpoly("q"))
    path.write_text(json.dumps(fam))
    rc, out, _ = run(capsys, "check-law", "--family", str(path))
    bad = json.loads(out)["violations"]
    assert rc == 1 and [v["triple"] for v in bad] == [[14, 15, 16]]


@pytest.mark.parametrize("argv", [
    ["kostka"],
    ["csf", "--system", "A3"],
    ["decompose", "--orbit", "3,2,2", "--ideal", "999"],
    ["verify-b3", "--data", "/nonexistent"],
    ["chartable", "--system", "G2"],
])
def test_error_exit_codes(capsys, argv):
    rc, _, err = run(capsys, *argv)
    assert rc == 2 and err.startswith("hesslab: error:")
