import csv
import io
import json
import subprocess
import sys

import pytest

from cyclorep.cli import render, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_table1_json_roundtrip():
    code, out, _ = call("table1", "--max-m", "20", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "table1"
    assert {r["m"]: r["a_m"] for r in doc["rows"]}[13] == 40
    assert len(doc["rows"]) == 15


def test_repr_text_and_csv():
    code, out, _ = call("repr", "13")
    assert code == 0 and "a_m: 40" in out and "b_m: 8" in out
    code, out, _ = call("repr", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "x", "y", "height", "value"] and len(rows) == 9


def test_csv_header_without_rows():
    code, out, _ = call("repr", "1", "--format", "csv")
    assert code == 0 and out.strip() == "n,x,y,height,value"


def test_threads_identical_output():
    for argv in (["table2", "--format", "json"], ["count", "100000", "--format", "csv"], ["repr", "4096"]):
        _, a, _ = call(*argv, "--threads", "1")
        _, b, _ = call(*argv, "--threads", "4")
        assert a == b


def test_cn_and_paper_precision():
    code, out, _ = call("cn", "35", "--format", "csv", "--paper-precision")
    assert code == 0 and "0.375..." in out
    code, out, _ = call("table3", "--format", "json")
    assert len(json.loads(out)["rows"]) == 21


def test_count_and_mh_and_family():
    _, out, _ = call("count", "20", "--form", "phi4", "--variant", "tilde", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["count_phi4"] == 12 and row["count_all"] == 15
    _, out, _ = call("mh", "5", "--format", "json")
    assert json.loads(out)["rows"][0]["m_h"] == 19
    _, out, _ = call("family", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["summary"]["k_s"] == 48 and doc["summary"]["b_lower_bound"] >= 16


def test_small_values_and_constants():
    _, out, _ = call("small-values", "--n-max", "10", "--theta", "0.5", "--format", "json")
    assert json.loads(out)["params"]["mode"] == "theta"
    _, out, _ = call("constants", "--prime-bound", "100000", "--format", "json")
    names = [r["name"] for r in json.loads(out)["rows"]]
    assert "kappa1" in names and "kappa1_lattice" in names


def test_big_ints_are_strings_in_json():
    env = {"command": "x", "params": {"m": 2**60, "k": 5}, "summary": {}, "rows": [{"v": 2**70, "c": 0.1 + 0.2}]}
    doc = json.loads(render(env, "json"))
    assert doc["params"] == {"m": str(2**60), "k": 5}
    assert doc["rows"][0] == {"v": str(2**70), "c": 0.3}


@pytest.mark.parametrize(
    "argv, code",
    [
        (["cn", "2"], 2),
        (["repr", "5", "--min-height", "1"], 2),
        (["count", "10", "--form", "all", "--variant", "tilde"], 2),
        (["mh", "2"], 2),
        (["count", "1000000000"], 3),
        (["family", "9"], 3),
        (["repr", str(2**60)], 3),
        (["bogus"], 1),
        (["cn"], 1),
        (["repr", "5", "--threads", "0"], 1),
        (["cn", "abc"], 1),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "cyclorep", "repr", "7", "--format", "json"], capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["summary"]["a_m"] == 24
