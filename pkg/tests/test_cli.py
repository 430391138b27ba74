import json
import subprocess
import sys
from pathlib import Path

import pytest

from finegrad.cli import run

GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,golden", [
    (["classify", "--algebra", "sp", "--n", "8"], "classify_sp8.json"),
    (["construct", "--desc", "sl-outer:m=1,s=0,d=00;10", "--n", "4"], "construct_sl4_outer.json"),
    (["profile", "--desc", "sympl:m=1,s=1,d=11"], "profile_sp6.json"),
    (["construct", "--desc", "pauli:n=2"], "pauli2.json"),
])
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()
    code, again, _ = invoke(capsys, *argv)
    assert again == out


def test_classify_counts(capsys):
    for alg, n, count in [("sl", 4, 8), ("so", 7, 4), ("sp", 8, 7), ("sl", 3, 4)]:
        code, out, _ = invoke(capsys, "classify", "--algebra", alg, "--n", str(n))
        assert code == 0 and len(json.loads(out)) == count
    code, out, _ = invoke(capsys, "classify", "--algebra", "sp", "--n", "8", "--mode", "orthogonal")
    recs = json.loads(out)
    assert len(recs) == 8 and {r["mode"] for r in recs} == {"orthogonal"}


def test_construct_json_layout(capsys):
    code, out, _ = invoke(capsys, "construct", "--desc", "sl-outer:m=1,s=0,d=00;10", "--n", "4")
    d = json.loads(out)
    assert list(d) == ["algebra", "field", "group", "components", "descriptor"]
    assert d["group"] == {"rank": 0, "torsion": [2, 2, 4]}
    degs = [c["degree"] for c in d["components"]]
    assert degs == sorted(degs) and len(degs) == 14
    assert sorted(c["dim"] for c in d["components"]) == [1] * 13 + [2]
    assert d["descriptor"] == "sl-outer:m=1,s=0,d=1;10"


def test_verify_and_corruption(tmp_path, capsys):
    good = tmp_path / "g.json"
    assert run(["export", "--desc", "sl-outer:m=0,s=0,d=1;1;1", "--out", str(good)]) == 0
    code, out, _ = invoke(capsys, "verify", str(good))
    assert code == 0 and json.loads(out)["ok"]
    d = json.loads(good.read_text())
    # move one basis vector into another component's degree: product containment breaks
    comps = d["components"]
    comps[0]["degree"], comps[1]["degree"] = comps[1]["degree"], comps[0]["degree"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    code, out, _ = invoke(capsys, "verify", str(bad))
    rep = json.loads(out)
    assert code == 1 and not rep["ok"] and rep["violations"]
    # a scalar changed: the components no longer match
    d = json.loads(good.read_text())
    d["components"][0]["basis"][0] = [["1/1"]] * len(d["components"][0]["basis"][0])
    bad.write_text(json.dumps(d))
    assert invoke(capsys, "verify", str(bad))[0] == 1


def test_refines(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["export", "--desc", "cartan:n=3", "--out", str(a)])
    run(["export", "--desc", "sl-inner:m=3,pp=", "--out", str(b)])
    code, out, _ = invoke(capsys, "refines", "--a", str(a), "--b", str(b))
    assert code == 0 and json.loads(out) == {"a_refines_b": True, "b_refines_a": True, "same_decomposition": True}
    c = tmp_path / "c.json"
    run(["export", "--desc", "pauli:n=3", "--out", str(c)])
    code, out, _ = invoke(capsys, "refines", "--a", str(a), "--b", str(c))
    assert code == 0 and json.loads(out)["a_refines_b"] is False
    d = tmp_path / "d.json"
    run(["export", "--desc", "pauli:n=2", "--out", str(d)])
    assert invoke(capsys, "refines", "--a", str(a), "--b", str(d))[0] == 1


def test_profile_from_file(tmp_path, capsys):
    f = tmp_path / "g2.json"
    assert run(["export", "--desc", "g2", "--out", str(f)]) == 0
    code, out, _ = invoke(capsys, "profile", str(f))
    d = json.loads(out)
    assert code == 0 and d["profile"] == [2] * 7 and d["dim"] == 14


@pytest.mark.parametrize("argv", [
    ["construct", "--desc", "sl-outer:m=1,s=0,d=00;1x"],
    ["construct", "--desc", "sl-outer:m=1,s=0,d=00;10", "--n", "6"],
    ["construct", "--desc", "sl-outer:m=1,s=0,d=00;00"],
    ["classify", "--algebra", "sl", "--n", "16"],
    ["classify", "--algebra", "sl", "--n", "18"],
    ["classify", "--algebra", "sp", "--n", "7"],
    ["export", "--desc", "pauli:n=2"],
    ["profile"],
    ["verify", "/nonexistent/file.json"],
])
def test_usage_errors(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit) as e:
        run(["classify", "--algebra", "e8", "--n", "4"])
    assert e.value.code == 2


def test_console_entry(tmp_path):
    p = subprocess.run([sys.executable, "-m", "finegrad.cli", "classify", "--algebra", "so", "--n", "5"], capture_output=True, text=True)
    assert p.returncode == 0 and len(json.loads(p.stdout)) == 3
