import json
from pathlib import Path

import pytest

from twisted_m0n.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(tmp_path, *argv, name="out.json"):
    out = tmp_path / name
    code = main([*map(str, argv), "--out", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_define(tmp_path, capsys):
    code, doc = run(tmp_path, "define", DATA / "split5.json")
    assert code == 0 and doc["summary"] == "degree 5, odd, parametrization available"
    code, doc = run(tmp_path, "define", DATA / "deg6_quadratics.json")
    assert doc["branch"] == "obstruction module applies"
    code, _ = run(tmp_path, "define", DATA / "not_squarefree.json", name="bad.json")
    assert code == 3
    assert "error: NotSquarefree factor=0" in capsys.readouterr().err


def test_context_and_compare(tmp_path, capsys):
    code, _ = run(tmp_path, "context", DATA / "split5.json", name="ctx.json")
    assert code == 0
    ctx = tmp_path / "ctx.json"
    a, b = DATA / "split5_cfg_a.json", DATA / "split5_cfg_b.json"
    _, doc = run(tmp_path, "compare", ctx, a, DATA / "split5_cfg_a_swapped.json")
    assert doc["result"] == "EQUIVALENT"
    _, doc = run(tmp_path, "compare", ctx, a, b)
    assert doc["result"] == "DIFFERENT"
    code, doc = run(tmp_path, "compare", ctx, a, DATA / "split5_degenerate.json")
    assert code == 2 and doc["result"] == "DEGENERATE"
    code, doc = run(tmp_path, "canonical", ctx, a)
    assert code == 0 and len(doc["chart"]["coords"]) == 2
    code, _ = run(tmp_path, "context", DATA / "deg6_quadratics.json", name="even.json")
    assert code == 3 and "EvenDegree" in capsys.readouterr().err


def test_roundtrip(tmp_path):
    code, doc = run(tmp_path, "roundtrip", DATA / "deg7_mixed.json", "--trials", 5)
    assert code == 0 and doc["passed"] and doc["trials"] == 5


def test_obstruction_and_residues(tmp_path, capsys):
    code, doc = run(tmp_path, "obstruction", DATA / "quat_m1_3.json", "--n", 6)
    assert code == 0 and doc["certificate"]["facts"]["split_by_E"]
    code, _ = run(tmp_path, "obstruction", DATA / "quat_m1_m1.json", "--n", 6, name="sq.json")
    assert code == 3 and "SquareParameter index=3" in capsys.readouterr().err
    code, doc = run(tmp_path, "residues", DATA / "ft_t_5.json")
    labels = {r["label"]: r["status"] for r in doc["residues"]}
    assert labels == {"t=0": "nontrivial", "t=1": "trivial", "inf": "nontrivial"}


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["define", str(bad)]) == 3
    assert "MalformedInput" in capsys.readouterr().err
    assert main(["define", str(tmp_path / "missing.json")]) == 3


@pytest.mark.parametrize("argv", [
    ["context", "deg7_mixed.json"],
    ["roundtrip", "split5.json", "--trials", "3", "--seed", "4"],
    ["obstruction", "quat_m1_3.json", "--n", "8"],
])
def test_deterministic_output(tmp_path, argv):
    args = [str(DATA / a) if a.endswith(".json") else a for a in argv]
    out = tmp_path / "out.json"
    assert main(args + ["--out", str(out)]) == 0
    first = out.read_bytes()
    assert main(args + ["--out", str(out)]) == 0
    assert out.read_bytes() == first


def test_selftest_small(tmp_path, capsys):
    code, doc = run(tmp_path, "selftest", "--scale", "small")
    assert code == 0 and len(doc["criteria"]) == 8
    assert capsys.readouterr().err.count("PASS") == 8
