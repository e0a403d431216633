import json
import subprocess
import sys

import pytest

from minrpp.cli import run

A3 = ["--type", "A3", "--orient", "1>2<3", "--m", "2"]


def call(capsys, *args):
    code = run(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_heap_json_and_dot(capsys):
    code, out, _ = call(capsys, "heap", *A3)
    data = json.loads(out)
    assert code == 0 and data["m"] == 2
    code, out, _ = call(capsys, "heap", *A3, "--dot")
    assert code == 0 and out.startswith("digraph")


def test_rho_then_inverse(capsys, tmp_path):
    code, out, _ = call(capsys, "rho", *A3, "--mults", '{"010":1,"011":1,"110":1}')
    assert code == 0
    data = json.loads(out)
    assert data["partitions"] == [[1], [2, 1], [1]]
    path = tmp_path / "rpp.json"
    path.write_text(out)
    code, out, _ = call(capsys, "inv", "--rpp", str(path))
    assert code == 0
    assert json.loads(out)["mults"] == {"010": 1, "011": 1, "110": 1}


def test_promote_returns_after_h_steps(capsys):
    _, out, _ = call(capsys, "rho", *A3, "--mults", '{"010":2,"111":1}')
    code, again, _ = call(capsys, "promote", "--rpp", out, "--times", "4")
    assert code == 0
    assert json.loads(again)["values"] == json.loads(out)["values"]


def test_toggle_fibre(capsys):
    _, out, _ = call(capsys, "rho", *A3, "--mults", '{"010":1}')
    code, toggled, _ = call(capsys, "toggle", "--rpp", out, "--vertex", "2")
    assert code == 0 and json.loads(toggled)["values"] != json.loads(out)["values"]
    code, _, err = call(capsys, "toggle", "--rpp", out, "--vertex", "9")
    assert code == 2 and "not in A3" in err


def test_split_roundtrip(capsys):
    code, out, _ = call(capsys, "split", *A3, "--filter", '["111","011"]', "--even", '{"111":1}',
                        "--odd", '{"010":2}')
    assert code == 0
    data = json.loads(out)
    assert isinstance(data["values"]["010"], dict)
    code, back, _ = call(capsys, "split", "--rpp", out)
    back = json.loads(back)
    assert code == 0
    assert sorted(back["filter"]) == ["011", "111"]
    assert back["even"] == {"111": 1} and back["odd"] == {"010": 2}


def test_roots_and_iso_type(capsys):
    code, out, _ = call(capsys, "roots", "--type", "D4")
    assert code == 0 and len(json.loads(out)["positive_roots"]) == 12
    code, out, _ = call(capsys, "iso-type", "--type", "E6", "--m", "1")
    assert code == 0 and json.loads(out)["size"] == 16


@pytest.mark.parametrize("args", [
    ["verify", "axioms", "--type", "D5", "--m", "1"],
    ["verify", "periodicity", *A3, "--N", "2"],
    ["verify", "periodicity", *A3, "--count", "20"],
    ["verify", "hg", "--rows", "2", "--cols", "2"],
    ["verify", "rsk", "--rows", "2", "--cols", "3"],
    ["verify", "gk", *A3],
    ["verify", "genfun", *A3, "--degree", "5"],
    ["verify", "genfun", *A3, "--degree", "5", "--filter", '["111"]'],
    ["verify", "togref", *A3],
    ["verify", "oracle", *A3, "--count", "3", "--samples", "3"],
])
def test_verify_commands_pass(capsys, args):
    code, out, _ = call(capsys, *args)
    assert code == 0, out
    assert json.loads(out)["ok"] is True


@pytest.mark.parametrize("args, needle", [
    (["heap", "--type", "A3", "--m", "7"], "m"),
    (["heap", "--m", "1"], "--type"),
    (["rho", *A3, "--mults", '{"100":1}'], "not supported"),
    (["rho", *A3, "--mults", "{not json"], "not JSON"),
    (["verify", "genfun", *A3, "--filter", '["010"]'], "not an order filter"),
    (["frobnicate"], "No such command"),
])
def test_usage_errors_exit_2(capsys, args, needle):
    code, _, err = call(capsys, *args)
    assert code == 2
    assert needle in err


def test_console_module_entry():
    proc = subprocess.run([sys.executable, "-m", "minrpp", "roots", "--type", "A2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert sorted(json.loads(proc.stdout)["positive_roots"]) == ["01", "10", "11"]


def test_documented_invocations(capsys, tmp_path):
    code, out, _ = call(capsys, "heap", "--type", "A5", "--orient", "1<2<3<4<5", "--m", "3", "--dot")
    assert code == 0 and out.count("->") == 12
    quiver = tmp_path / "q.json"
    _, heap_json, _ = call(capsys, "heap", *A3)
    quiver.write_text(json.dumps(json.loads(heap_json)["quiver"]))
    code, out, _ = call(capsys, "rho", "--quiver", str(quiver), "--m", "2", "--mults", '{"010":1,"011":1,"110":1}')
    assert code == 0 and json.loads(out)["partitions"] == [[1], [2, 1], [1]]
    code, out, _ = call(capsys, "verify", "periodicity", "--type", "A3", "--m", "2", "--N", "1")
    assert code == 0 and json.loads(out)["order"] == 4
