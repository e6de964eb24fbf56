import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmdual import ChowClass, InvalidInput
from cmdual.cli import parse_class, run
from strategies import nonzero_proper_classes


def call(*argv):
    err = io.StringIO()
    code, out = run(list(argv), stderr=err)
    return code, (json.loads(out) if out.strip() else None), err.getvalue()


def test_parse_text_and_json():
    spec = parse_class("3:7,11,5,0")
    assert (spec.ambient, spec.coeffs, spec.dim, spec.signed) == (3, (7, 11, 5, 0), None, False)
    assert parse_class(" 2 : 0, 0,1 ").cls == ChowClass(2, (0, 0, 1))
    spec = parse_class('{"ambient": 4, "coeffs": [4,5,3,0,0], "dim": 2, "signed": true}')
    assert (spec.dim, spec.signed) == (2, True)


@pytest.mark.parametrize("bad", [
    "3:7,11,5",
    "3:",
    "x:1,2",
    "2:1.5,0,0",
    "2:1,,0",
    '{"ambient": 2}',
    '{"ambient": 2, "coeffs": [1, 0, 0], "extra": 1}',
    '{"ambient": 2, "coeffs": [1, 0, 0], "dim": 5}',
    '{"ambient": true, "coeffs": [1, 0]}',
    "[1, 2]",
])
def test_parse_rejects(bad):
    with pytest.raises(InvalidInput):
        parse_class(bad)


def test_dual_example():
    code, doc, err = call("dual", "--class", "4:6,9,8,3,0", "--dim", "3")
    assert code == 0
    res = doc["result"]
    assert res["dual_signed"]["h_poly"] == [0, 0, 3, 5, 4]
    assert (res["defect"], res["dual_degree"], res["dual_dim"]) == (1, 3, 2)
    assert "degree 3" in err


def test_euler_vertex_example():
    code, doc, _ = call("euler-vertex", "--class", "3:2,3,0,0")
    assert code == 0 and doc["result"]["euler_obstruction"] == -1


def test_coble_example():
    code, doc, _ = call("self-dual", "solve", "--n", "7", "--fix", "6=4", "--fix", "5=16", "--fix", "4=48")
    assert code == 0
    res = doc["result"]
    assert res["parameters"] == [3]
    assert res["integer_particular"] == [-336, -480, -264, 0, 48, 16, 4, 0]
    assert res["integer_basis"] == [[4, 6, 4, 1, 0, 0, 0, 0]]
    assert res["particular"][0] == {"num": -336, "den": 1}


def test_solve_unsigned_odd_dim_converts():
    # unsigned d[P^1] with dim 1 is the signed -d[P^1]; the completion is d[P^0]
    code, doc, _ = call("self-dual", "solve", "--n", "2", "--fix", "1=5")
    assert code == 0 and doc["result"]["integer_particular"] == [5, 5, 0]
    code, doc, _ = call("self-dual", "solve", "--n", "2", "--fix", "1=-5", "--signed")
    assert doc["result"]["integer_particular"] == [-5, -5, 0]


@pytest.mark.parametrize("argv,code,key,value", [
    (["ranks", "--class", "3:7,11,5,0"], 0, "ranks", [0, 4, 5]),
    (["conormal", "--class", "2:2,2,0"], 0, "bidegrees", [2, 2]),
    (["ed", "--class", "3:7,11,5,0"], 0, "ed_degree", 9),
    (["dual-variety", "--class", "4:6,9,8,3,0"], 0, "dual_degree", 3),
    (["cone", "--class", "2:2,2,0", "--from", "2", "--to", "3"], 0, "cone_h_poly", [0, 2, 4, 2]),
    (["cone", "--class", "3:2,3,0,0", "--general", "--r", "2"], 0, "cone_h_poly", [0, 3, 5, 1]),
    (["pullback", "--class", "2:3,3,1", "--from", "2", "--to", "3"], 0, "h_poly", [1, 4, 6, 3]),
    (["hypersurface", "--n", "7", "--d", "4", "--sing-dim", "3"], 0, "ranks", [None, None, None, None, 36, 12, 4]),
    (["plucker", "curve", "--d", "3", "--sing", "2:1"], 0, "dual_degree", 4),
    (["plucker", "hypersurface", "--n", "3", "--d", "4"] + ["--sing", "1:1"] * 16, 0, "teissier_dual_degree", 4),
    (["self-dual", "check", "--class", "2:3,3,0"], 0, "self_dual_class", True),
    (["self-dual", "surface", "--d", "4", "--isolated"], 0, "class", {"ambient": 3, "coeffs": [-8, 0, 4, 0], "dim": 2}),
    (["self-dual", "budget", "--d", "3"], 0, "node_count", {"num": 9, "den": 2}),
    (["self-dual", "hypcons", "--n", "6", "--d", "3", "--sing-dim", "1"], 0, "feasible", False),
])
def test_subcommands(argv, code, key, value):
    got, doc, _ = call(*argv)
    assert got == code
    assert doc["result"][key] == value


def test_mt_cross_check_reported():
    _, doc, _ = call("dual-variety", "--class", "3:7,11,5,0")
    assert doc["result"]["mt_cross_check"] == {"agrees": True, "value": 4}


@pytest.mark.parametrize("argv,code,err", [
    (["ranks", "--class", "3:7,11,5"], 2, "invalid_input"),
    (["ranks", "--class", "2:0,0,1"], 3, "non_proper_class"),
    (["dual", "--class", "3:0,0,0,0"], 3, "zero_class"),
    (["dual", "--class", "3:1,1,0,0", "--dim", "0"], 2, "dimension_mismatch"),
    (["plucker", "curve", "--d", "3", "--sing", "2:5"], 3, "degenerate_dual"),
    (["self-dual", "solve", "--n", "3", "--fix", "2=1", "--fix", "1=3", "--fix", "0=3"], 3, "inconsistent_constraints"),
    (["cone", "--class", "3:1,1,1,0", "--general", "--r", "2"], 3, "not_divisible"),
    (["self-dual", "check", "--class", "3:1,0,0,0", "--dim", "0"], 0, None),
    (["nonsense"], 2, "invalid_input"),
    ([], 2, "invalid_input"),
])
def test_error_codes(argv, code, err):
    got, doc, stderr = call(*argv)
    assert got == code
    if err is not None:
        assert doc["error"]["code"] == err
        assert err in stderr


def test_quiet_and_text_modes():
    err = io.StringIO()
    code, out = run(["--quiet", "ranks", "--class", "3:7,11,5,0"], stderr=err)
    assert code == 0 and err.getvalue() == "" and json.loads(out)
    code, out = run(["ranks", "--class", "3:7,11,5,0", "--no-json"], stderr=err)
    assert out.strip() == "ranks: [0, 4, 5]"


def test_output_is_canonical_json():
    _, out = run(["dual", "--class", "4:6,9,8,3,0", "--dim", "3"], stderr=io.StringIO())
    doc = json.loads(out)
    assert out == json.dumps(doc, sort_keys=True, indent=2) + "\n"


@given(nonzero_proper_classes(max_n=8))
def test_json_round_trip(data):
    c, dim = data
    text = "%d:%s" % (c.ambient, ",".join(map(str, c.coeffs)))
    code, out1 = run(["--quiet", "dual", "--class", text, "--dim", str(dim)])
    assert code == 0
    doc = json.loads(out1)
    # the echoed input, fed back, reproduces the same document byte for byte
    code, out2 = run(["--quiet", "dual", "--class", json.dumps(doc["result"]["input"])])
    assert out2 == out1
    # the emitted dual, fed back, dualizes to the original input
    dual = doc["result"]["dual"]
    code, out3 = run(["--quiet", "dual", "--class", json.dumps(dual)])
    assert code == 0
    assert json.loads(out3)["result"]["dual"] == doc["result"]["input"]


TOKENS = st.sampled_from([
    "dual", "ranks", "conormal", "ed", "dual-variety", "cone", "euler-vertex", "pullback",
    "hypersurface", "plucker", "curve", "self-dual", "check", "solve", "surface", "budget",
    "hypcons", "--class", "--dim", "--signed", "--from", "--to", "--general", "--r", "--n",
    "--d", "--sing-dim", "--sing", "--fix", "--e", "--isolated", "--json", "--no-json",
    "3:7,11,5,0", "2:0,0,1", "4:6,9,8,3,0", "3:0,0,0,0", "2:1", "{}", '{"ambient":1}',
    "0", "1", "2", "3", "7", "-1", "-5", "2:1", "1:1", "6=4", "x", "", "99",
])


@given(st.lists(TOKENS, max_size=9))
def test_fuzz_never_crashes(argv):
    code, out = run(["--quiet"] + argv, stderr=io.StringIO())
    assert code in (0, 2, 3)
    if out.strip().startswith("{"):
        doc = json.loads(out)
        assert ("error" in doc) == (code != 0)


@given(st.lists(st.text(max_size=12), max_size=6))
def test_fuzz_arbitrary_text(argv):
    code, _ = run(["--quiet"] + argv, stderr=io.StringIO())
    assert code in (0, 2, 3)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cmdual", "--quiet", "euler-vertex", "--class", "3:2,3,0,0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["euler_obstruction"] == -1
    proc = subprocess.run(
        [sys.executable, "-m", "cmdual", "ranks", "--class", "3:1"], capture_output=True, text=True
    )
    assert proc.returncode == 2
