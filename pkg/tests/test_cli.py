"""CLI subcommands, exit codes, determinism."""

import json

import pytest

from cellmac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_builtin(capsys):
    code, out, _ = run(capsys, "validate", "--builtin", "cube-boundary")
    assert code == 0
    assert "ok, 27 cells" in out
    assert "field: QQ" in out


def test_validate_json_format(capsys):
    code, out, _ = run(capsys, "validate", "--builtin", "vertex", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["cells"] == 2


def test_missing_file_exits_3(capsys):
    code, _, err = run(capsys, "validate", "--file", "/no/such/file.json")
    assert code == 3
    assert "error" in err


def test_bad_json_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "validate", "--file", str(p))
    assert code == 2


def test_invalid_complex_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"vertices": ["1"], "cells": []}))
    code, _, err = run(capsys, "validate", "--file", str(p))
    assert code == 2
    assert "no 0-cell" in err


def test_unknown_builtin_exits_2(capsys):
    code, _, err = run(capsys, "cm", "--builtin", "nope")
    assert code == 2
    assert "available" in err


def test_nonprime_char_exits_4(capsys):
    code, _, err = run(capsys, "cm", "--builtin", "vertex", "--char", "6")
    assert code == 4


def test_table_non_simplicial_exits_4(capsys):
    code, _, err = run(capsys, "table", "--builtin", "cube-boundary")
    assert code == 4


def test_cm_examples(capsys):
    code, out, _ = run(capsys, "cm", "--builtin", "cube-boundary", "--format", "json")
    rep = json.loads(out)
    assert rep["isCM"] is True and rep["lcmOrder"] == 2 and rep["gorensteinStar"] is True

    code, out, _ = run(capsys, "cm", "--builtin", "triangle-wedge", "--format", "json")
    rep = json.loads(out)
    assert rep["isCM"] is False
    assert [0, ["s"]] in rep["witnesses"]

    code, out, _ = run(capsys, "cm", "--builtin", "solid-square", "--format", "json")
    assert json.loads(out)["lcmOrder"] == 1


def test_cm_char_echoed(capsys):
    code, out, _ = run(capsys, "cm", "--builtin", "vertex", "--char", "5")
    assert code == 0
    assert "field: GF(5)" in out


def test_hexagon_verdicts(capsys):
    code, out, _ = run(capsys, "hexagon", "--builtin", "solid-square", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdicts"]["identity"] is True
    assert rep["verdicts"]["kIndices"] == [0, 1]
    assert rep["verdicts"]["linear"] == {
        "cells": False, "res1_dual": True, "res2_dual": False,
    }
    assert set(rep["corners"]) == {
        "cells", "res1", "res1_dual", "res2", "res2_dual", "cells_dual",
    }


def test_table_command_matches(capsys):
    code, out, _ = run(capsys, "table", "--builtin", "boundary-simplex-2", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["allMatch"] is True
    assert len(rep["rows"]) == 6


def test_resolve_output(capsys):
    code, out, _ = run(capsys, "resolve", "--builtin", "vertex", "--format", "json")
    rep = json.loads(out)
    assert rep["betti"]["entries"] == [{"dim": 1, "index": 0, "subset": "0"}]


def test_byte_determinism(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "hexagon", "--builtin", "square-boundary", "--format", "json")
        outs.add(out)
    for jobs in ("1", "3"):
        _, out, _ = run(capsys, "hexagon", "--builtin", "square-boundary",
                        "--format", "json", "--jobs", jobs)
        outs.add(out)
    assert len(outs) == 1


def test_tsv_format(capsys):
    code, out, _ = run(capsys, "homology", "--builtin", "vertex", "--format", "tsv")
    assert code == 0
    assert "cohomology.0.0\t1\n" in out


def test_homology_text(capsys):
    code, out, _ = run(capsys, "homology", "--builtin", "boundary-simplex-2")
    assert code == 0
    assert "homology.1.111: 1" in out
