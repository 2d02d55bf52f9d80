import csv
import io
import json

import pytest

from octog2 import cli
from octog2.scalar import from_json


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_multable_json(capsys):
    status, out, _ = run(capsys, "multable", "--format", "json")
    table = json.loads(out)
    assert status == 0 and len(table) == 8 and all(len(r) == 8 for r in table)
    assert table[2][4] == {"sign": 1, "index": 1}  # e1 e3 = e0
    assert table[3][2] == {"sign": -1, "index": 5}  # e2 e1 = -e4


def test_roots_json(capsys):
    _, out, _ = run(capsys, "roots", "--format", "json")
    recs = json.loads(out)
    assert len(recs) == 12
    assert recs[0] == {"label": "beta", "m": 2, "n": -1, "kind": "short"}
    assert {r["kind"] for r in recs} == {"short", "long"}


def test_structure_csv(capsys):
    status, out, _ = run(capsys, "structure", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert status == 0
    assert rows[0][:3] == ["x", "y", "H_beta"] and len(rows[0]) == 16
    assert len(rows) == 197


def test_structure_json(capsys):
    _, out, _ = run(capsys, "structure", "--format", "json")
    doc = json.loads(out)
    assert len(doc["basis"]) == 14 and len(doc["brackets"]) == 196


def test_action_table_json(capsys):
    _, out, _ = run(capsys, "action-table", "--format", "json")
    doc = json.loads(out)
    assert len(doc["table"]) == 12 and all(len(r) == 7 for r in doc["table"])
    assert doc["table"][0] == [1, 0, -1, 1, -2, 0, 0]


def test_chevalley_matrices_json(capsys):
    _, out, _ = run(capsys, "chevalley", "--matrices", "--format", "json")
    docs = json.loads(out)
    assert [d["name"] for d in docs][:3] == ["H_beta", "H_gamma", "E_beta"]
    m = docs[0]["matrix"]
    assert len(m) == 8 and from_json(m[2][4]) == 2j


def test_chevalley_text(capsys):
    _, out, _ = run(capsys, "chevalley")
    assert "E_beta = (i/2)e01 + (1/2)e03" in out.splitlines()


def test_kernel(capsys):
    status, out, _ = run(capsys, "kernel")
    assert status == 0 and "orbit spans ker D: yes" in out
    status, out, _ = run(capsys, "kernel", "--format", "json")
    doc = json.loads(out)
    assert doc["kernel_dimension"] == 7 and doc["rank_D"] == 14
    assert len(doc["g_basis"]) == 14 and len(doc["g_basis"][0]["matrix"]) == 8


def test_irrep(capsys):
    status, out, _ = run(capsys, "irrep", "0", "1")
    assert status == 0
    assert "dim = 14 (weyl oracle: 14)" in out.splitlines()
    _, out, _ = run(capsys, "irrep", "1", "0", "--weights", "--format", "json")
    doc = json.loads(out)
    assert doc["dimension"] == 7 and len(doc["weights"]) == 7


def test_irrep_degree_bound_is_usage_error(capsys):
    status, _, err = run(capsys, "irrep", "1", "2")
    assert status == 2 and "max_degree" in err


def test_verify_suite(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "chevalley")
    assert status == 0 and out.splitlines()[-1].startswith("overall: PASS")


def test_verify_failure_exit_code(capsys, monkeypatch):
    from octog2 import verify

    monkeypatch.setitem(verify.SUITES, "gf8", [("broken", lambda: "witness")])
    status, out, _ = run(capsys, "verify", "--suite", "gf8")
    assert status == 1 and "FAIL" in out


def test_conventions(capsys):
    status, out, _ = run(capsys, "conventions")
    assert status == 0 and "a^3 + a + 1" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "roots.csv"
    status, out, _ = run(capsys, "roots", "--format", "csv", "--output", str(target))
    assert status == 0 and out == ""
    assert target.read_text().splitlines()[0] == "label,m,n,kind"


@pytest.mark.parametrize("argv", [["bogus"], ["roots", "--frobnicate"], ["roots", "--format", "xml"], []])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_unsupported_format_is_usage_error(capsys):
    status, _, err = run(capsys, "kernel", "--format", "csv")
    assert status == 2 and "usage" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "structure")[1]
    assert run(capsys, "structure")[1] == first
