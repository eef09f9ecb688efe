import json
from fractions import Fraction
import subprocess
import sys

import pytest

from artifact import heis as H
from artifact import palgebra as P
from artifact.cli import main

LEFT_CURL = {"domain": "d", "layers": [{"op": "cup", "at": 2, "left": "d"}, {"op": "cross", "at": 2},
                                       {"op": "cap", "at": 1}]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_sw_apply_zero_vector(capsys):
    code, out = run_json(capsys, "sw-apply", "--n", "2", "--k", "2", "--op", "e2", "--vec", "(1,2)")
    assert code == 0 and out["output"] == {}
    code, out = run_json(capsys, "sw-apply", "--n", "2", "--k", "2", "--op", "e2", "--vec", "(2,2)")
    assert out["output"] == {"(0|2,2)": 1}


def test_heis_reduce_left_curl(capsys, tmp_path):
    f = tmp_path / "curl.json"
    f.write_text(json.dumps(LEFT_CURL))
    code, out = run_json(capsys, "heis-reduce", "--file", str(f))
    assert code == 0 and out["terms"] == []


def test_heis_reduce_sum(capsys, tmp_path):
    circ = {"domain": "", "layers": [{"op": "cup", "at": 1, "left": "d"}, {"op": "cap", "at": 1}]}
    f = tmp_path / "sum.json"
    f.write_text(json.dumps([{"coef": 2, "diagram": circ}, {"coef": "-1/2", "diagram": circ}]))
    code, out = run_json(capsys, "heis-reduce", "--file", str(f))
    want = (H.reduce(H.SliceDiagram.from_json(circ)) * Fraction(3, 2)).to_json()
    assert code == 0 and out == json.loads(json.dumps(want, default=str))


def test_pa_mul(capsys):
    code, out = run_json(capsys, "pa-mul", "--k", "1", "--a", "[[1,-1]]", "--b", "[[1,-1]]")
    assert code == 0 and out["middle_components"] == 0
    code, out = run_json(capsys, "pa-mul", "--k", "1", "--a", "[[1],[-1]]", "--b", "[[1],[-1]]")
    assert out["middle_components"] == 1
    code, out = run_json(capsys, "pa-mul", "--k", "2", "--a", "e1", "--b", "s1 e1")
    assert out["product"] == (P.e(1, 2) * P.s(1, 2) * P.e(1, 2)).to_json()


def test_pa_jm_and_verify(capsys):
    code, out = run_json(capsys, "pa-jm", "--k", "2", "--i", "2")
    assert code == 0 and out["element"] == P.e(1, 2).to_json()
    code, out = run_json(capsys, "pa-verify", "--suite", "HR", "--k", "2")
    assert code == 0 and out["all_pass"] and out["passed"] == out["total"] > 0
    code, out = run_json(capsys, "pa-verify", "--suite", "Skein", "--k", "2")
    assert code == 0 and out["all_pass"]


def test_aff_verify_and_eval(capsys):
    code, out = run_json(capsys, "aff-verify", "--k", "1", "--targets", "pr,hecke,heis")
    assert code == 0 and out["all_pass"]
    code, out = run_json(capsys, "aff-eval", "--k", "2", "--expr", "t2 t2 + e2", "--target", "heis")
    assert code == 0 and out["value"] == H.HeisMorphism.identity(H.up_down(2)).to_json()
    code, out = run_json(capsys, "aff-eval", "--k", "2", "--expr", "e2", "--target", "tensor",
                         "--n", "2", "--module", "V")
    assert code == 0 and out["value"]["module"] == "V"


def test_heis_decompose(capsys, tmp_path):
    d = H.simple_diagrams(H.up_down(2), H.up_down(2))[7]
    f = tmp_path / "d.json"
    f.write_text(json.dumps(d.to_json()))
    code, out = run_json(capsys, "heis-decompose", "--file", str(f))
    assert code == 0 and out["roundtrip"] is True


def test_deterministic_and_pretty(capsys):
    argv = ("pa-jm", "--k", "3", "--i", "5", "--kind", "sigma")
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b
    pretty = run(capsys, "--pretty", *argv)[1]
    assert "\n  " in pretty and json.loads(pretty) == json.loads(a)
    assert run(capsys, *argv, "--pretty")[1] == pretty
    keys = list(json.loads(a))
    assert keys == sorted(keys)


@pytest.mark.parametrize("argv", [
    ("pa-mul", "--k", "2", "--a", "e9", "--b", "e1"),
    ("pa-mul", "--k", "x", "--a", "e1", "--b", "e1"),
    ("pa-mul", "--k", "2", "--a", "{bad", "--b", "e1"),
    ("pa-mul", "--k", "1", "--a", "[[1,2]]", "--b", "[[1,-1]]"),
    ("aff-eval", "--k", "2", "--expr", "t1"),
    ("aff-verify", "--k", "2", "--targets", "nope"),
    ("sw-apply", "--n", "2", "--k", "2", "--op", "e2", "--vec", "(1,5)"),
    ("sw-apply", "--n", "2", "--k", "2", "--op", "e2", "--vec", "(1)"),
    ("heis-count", "--domain", "uxd", "--codomain", "ud"),
    ("no-such-verb",),
])
def test_malformed_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bad_slice_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"domain": "uu", "layers": [{"op": "cap", "at": 1}]}))
    assert run(capsys, "heis-reduce", "--file", str(f))[0] == 2
    f.write_text("not json")
    assert run(capsys, "heis-reduce", "--file", str(f))[0] == 2


def test_failed_identity_exit_1(capsys, monkeypatch):
    def broken(name, k):
        return [("fake", P.e(1, k), P.one(k))]
    monkeypatch.setattr(P, "relation_suite", broken)
    code, out, err = run(capsys, "pa-verify", "--suite", "HR", "--k", "2")
    assert code == 1
    assert json.loads(out)["all_pass"] is False
    assert "FAIL fake" in err and "lhs=" in err and "rhs=" in err


def test_budget_exit_1(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("RELATION_STEP_BUDGET", "1")
    f = tmp_path / "x.json"
    f.write_text(json.dumps({"domain": "ud", "layers": [{"op": "cross", "at": 1}] * 4}))
    code, out, _ = run(capsys, "heis-reduce", "--file", str(f))
    assert code == 1 and "error" in json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "artifact", "sw-apply", "--n", "2", "--k", "2",
                           "--op", "e2", "--vec", "(1,2)"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["output"] == {}
