import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from quiverlink import catalog, cli

SCHEMA = Path(cli.__file__).resolve().parent / "schema" / "table.schema.json"


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_color_count_trefoil(capsys):
    assert run(capsys, "color", "count", "--diagram", "3_1", "--quandle", "dihedral:3") == (0, "9\n", "")


def test_quiver_poly_worked_example(capsys):
    code, out, _ = run(capsys, "quiver", "poly", "--diagram", "L4a1", "--quandle", "paper-ex2", "--endo", "1,1,2")
    assert code == 0 and out.strip() == "5 + u + 2u^2 + u^4"


def test_endos_count(capsys):
    code, out, _ = run(capsys, "quandle", "endos", "--quandle", "paper-ex1", "--count")
    assert code == 0 and out.strip() == "68"


def test_quandle_verify(capsys):
    assert run(capsys, "quandle", "verify", "--quandle", "tetrahedral")[0] == 0


def test_quandle_verify_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("quandle bad 2\n1 1\n1 2\n")
    code, out, err = run(capsys, "quandle", "verify", "--quandle", str(path))
    assert code in (1, 2)
    assert "axiom" in (out + err)


def test_iso_expectations(capsys):
    base = ["quiver", "iso", "--diagram", "6^{0,1}_1", "--other", "8_1", "--quandle", "paper-4elt", "--endo", "2,4,2,2"]
    assert run(capsys, *base, "--expect", "non-iso")[0] == 0
    assert run(capsys, *base, "--expect", "iso")[0] == 1


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "color", "count", "--diagram", "no_such", "--quandle", "dihedral:3")[0] == 2
    assert run(capsys, "color", "count", "--diagram", "3_1", "--quandle", "nope:7")[0] == 2
    assert run(capsys, "quiver", "poly", "--diagram", "3_1", "--quandle", "dihedral:3", "--endo", "1,2")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--threads", "0", "table", "reproduce")[0] == 2


def test_malformed_diagram_file(tmp_path, capsys):
    path = tmp_path / "d.mgd"
    path.write_text("diagram d\nx+ 1 2 3\n")
    code, _, err = run(capsys, "diagram", "validate", "--diagram", str(path))
    assert code == 2 and "line 2" in err


def test_diagram_info_and_resolve(capsys):
    code, out, _ = run(capsys, "diagram", "info", "--diagram", "8_1", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["ch"] == 8
    code, out, _ = run(capsys, "diagram", "resolve", "--diagram", "8_1", "--sign", "+")
    assert code == 0 and not [line for line in out.splitlines() if line.startswith("m ")]


def test_alternate_addressing(capsys):
    n = len(catalog.get("8_1").diagrams)
    for k in range(n):
        assert run(capsys, "color", "count", "--diagram", f"8_1@{k}", "--quandle", "dihedral:3")[1] == "9\n"


def test_output_file(tmp_path, capsys):
    target = tmp_path / "q.dot"
    code, out, _ = run(capsys, "quiver", "build", "--diagram", "3_1", "--quandle", "dihedral:3", "--format", "dot", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph")


def test_table_json_validates_against_schema(capsys):
    code, out, _ = run(capsys, "table", "reproduce", "--json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, json.loads(SCHEMA.read_text()))
    assert data["summary"]["mismatch"] == 0


def test_table_text_is_deterministic(capsys):
    first = run(capsys, "table", "reproduce")
    second = run(capsys, "table", "reproduce")
    assert first == second
    assert "FLAG" in first[1]


def test_threaded_table_matches_serial(capsys):
    serial = run(capsys, "table", "reproduce", "--json")[1]
    threaded = run(capsys, "--threads", "2", "table", "reproduce", "--json")[1]
    assert serial == threaded


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "8_1" in out
    code, out, _ = run(capsys, "catalog", "show", "3_1")
    assert code == 0 and "x" in out


@pytest.mark.parametrize("entry", [["-m", "quiverlink"], ["-c", "from quiverlink.cli import main; main()"]])
def test_module_entry_points(entry):
    proc = subprocess.run([sys.executable, *entry, "color", "count", "--diagram", "3_1", "--quandle", "dihedral:3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "9\n"
