import io
import json
import subprocess
import sys

import pytest

from niven import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = run(*argv, "--json")
    return code, json.loads(out), out


def test_witness_e_json():
    code, rep, text = report("witness", "e", "--q", "10", "--eps", "1e-30")
    assert code == 0
    assert rep["command"] == "witness e"
    assert rep["status"] == "falsified"
    assert rep["precision"] == "1/" + "1" + "0" * 30
    assert rep["results"]["kind"] == "fourier-e"
    assert set(rep) == {"command", "inputs", "results", "precision", "status"}


def test_witness_pi_text_narrative():
    code, out, _ = run("witness", "pi", "--candidate", "22/7", "--eps", "1e-40")
    assert code == 0
    assert "verdict: falsified via integer-gap" in out
    assert "approximate" in out


def test_legendre_verify():
    code, rep, _ = report("legendre", "verify", "--n-max", "8", "--r", "1")
    assert code == 0 and rep["status"] == "ok"
    assert rep["results"]["all_pass"]
    names = {c["check"] for c in rep["results"]["checks"]}
    assert {"orthogonality", "norm", "triple-construction", "integer-scaling"} <= names


def test_identity_check():
    code, rep, _ = report("identity", "check", "--count", "15", "--seed", "3")
    assert code == 0
    assert rep["results"]["disagreements"] == 0
    assert len(rep["results"]["instances"]) == 15


@pytest.mark.parametrize(
    "argv",
    [
        ("bounds", "solve", "pi", "--candidate", "22/7"),
        ("bounds", "solve", "exp", "--r", "2", "--q", "7"),
        ("bounds", "solve", "cbs", "--r", "1", "--q", "1"),
        ("approx", "e", "--r", "2", "--n-max", "4"),
        ("fourier", "demo", "--q-max", "6"),
        ("naive-bound", "demo"),
    ],
)
def test_other_subcommands(argv):
    code, rep, _ = report(*argv)
    assert code == 0
    assert rep["status"] in ("ok", "falsified")


def test_bounds_values():
    _, rep, _ = report("bounds", "solve", "pi", "--candidate", "3")
    assert rep["results"]["n"] == 24
    _, rep, _ = report("bounds", "solve", "cbs", "--r", "1", "--q", "1")
    assert rep["results"]["n"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("witness", "e", "--q", "12"),
        ("witness", "pi", "--candidate", "3", "--eps", "1/10^20"),
        ("approx", "e", "--r", "2", "--n-max", "3"),
        ("identity", "check", "--count", "5"),
        ("legendre", "verify", "--n-max", "4", "--r", "7/2"),
    ],
)
def test_json_is_canonical_and_deterministic(argv):
    _, first, text1 = report(*argv)
    _, _, text2 = report(*argv)
    assert text1 == text2
    assert cli.render_json(json.loads(text1)) == text1
    _walk_no_floats(first)


def _walk_no_floats(node):
    assert not isinstance(node, float)
    if isinstance(node, dict):
        for v in node.values():
            _walk_no_floats(v)
    elif isinstance(node, list):
        for v in node:
            _walk_no_floats(v)


def test_eps_spellings_agree():
    a = report("witness", "e", "--q", "5", "--eps", "1e-30")[2]
    b = report("witness", "e", "--q", "5", "--eps", "1/10^30")[2]
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ("witness", "pi", "--candidate", "abc"),
        ("witness", "pi", "--candidate", "-3"),
        ("witness", "e", "--q", "3", "--eps", "0"),
        ("witness", "e", "--q", "0"),
        ("bounds", "solve", "exp", "--r", "2"),
        ("nonsense",),
        (),
    ],
)
def test_usage_errors(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_resource_cap():
    code, rep, _ = report("bounds", "solve", "pi", "--candidate", "355/113", "--cap", "1000")
    assert code == 3 and rep["status"] == "error"
    code, _, err = run("witness", "pi", "--candidate", "22/7", "--work-cap", "10")
    assert code == 3 and "work cap" in err


def test_env_cap(monkeypatch):
    monkeypatch.setenv("NIVEN_CAP", "50")
    code, _, _ = run("bounds", "solve", "pi", "--candidate", "22/7")
    assert code == 3


def test_indeterminate_exit_code():
    # n = 0 leaves 1 + cos(355/113) ~ 4e-14 to resolve; eps = 1/10 cannot
    code, rep, _ = report("witness", "pi", "--candidate", "355/113", "--n", "0", "--eps", "1/10")
    assert code == 4
    assert rep["status"] == "indeterminate"
    assert rep["results"]["refined"] is True


def test_defect_exit_code(monkeypatch):
    monkeypatch.setattr(cli, "legendre_checks", lambda n, r: [{"check": "norm", "n": 0, "pass": False}])
    code, _, err = run("legendre", "verify")
    assert code == 5 and "failed" in err


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run("witness", "e", "--q", "4", "--json", "--out", str(target))
    assert code == 0
    assert target.read_text() == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "niven", "witness", "e", "--q", "3", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "falsified"
