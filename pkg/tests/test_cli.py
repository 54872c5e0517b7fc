"""
End-to-end tests of the command-line entry point.
"""

import json

import pytest

from AW_Forge.aw_forge import EXIT_FAIL, EXIT_PASS, EXIT_PRECONDITION, main, parse_arguments

RACAH_SPIN_TWO = ["--realization", "racah", "--algebra", "su2", "--j", "2", "--b", "1/3", "--c", "1/5"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ("AW_FORGE_MODE", "AW_FORGE_THREADS", "AW_FORGE_DRAWS", "AW_FORGE_SEED", "AW_FORGE_REPORT_DIR", "LOG_FILE"):
        monkeypatch.delenv(key, raising=False)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_racah(capsys):
    code, out = _run(capsys, "verify", *RACAH_SPIN_TWO, "--a", "7")
    report = json.loads(out)
    assert code == EXIT_PASS
    assert report["status"] == "pass"
    assert report["schema"] == "aw-forge/1"
    assert report["result"]["casimir_commutes"] is True
    assert report["result"]["bracket_form"] is True
    assert all(report["result"]["exchange"].values())
    assert {c["relation"] for c in report["checks"]} >= {"AW1", "AW2", "casimir"}


def test_verify_askey_wilson(capsys):
    code, out = _run(
        capsys, "verify", "--realization", "aw", "--algebra", "uq_su2", "--j", "3/2", "--q", "2",
        "--a", "-3", "--b", "1/7", "--c", "2/9",
    )
    assert code == EXIT_PASS
    assert json.loads(out)["realization"]["parameters"] == {"a": "-3", "b": "1/7", "c": "2/9"}


def test_verify_negative_control(capsys):
    code, out = _run(capsys, "verify", *RACAH_SPIN_TWO, "--a", "7", "--perturb", "omega")
    assert code == EXIT_FAIL
    assert json.loads(out)["status"] == "fail"


def test_vanishing_denominator_is_a_precondition(capsys):
    code, out = _run(capsys, "verify", *RACAH_SPIN_TWO, "--a", "5")
    report = json.loads(out)
    assert code == EXIT_PRECONDITION
    assert report["status"] == "error"
    assert report["error"]["error"] == "DenominatorVanishes"


@pytest.mark.parametrize("argv", [
    ["verify", "--realization", "wilson", "--algebra", "su2", "--j", "1"],
    ["verify", *RACAH_SPIN_TWO, "--a", "0.5"],
    ["verify", "--realization", "aw", "--algebra", "uq_su2", "--j", "1", "--q", "1", "--a", "1"],
])
def test_invalid_input(capsys, argv):
    code, out = _run(capsys, *argv)
    assert code == EXIT_PRECONDITION
    assert json.loads(out)["status"] == "error"


def test_recurrence_csv(capsys):
    code, out = _run(
        capsys, "recurrence", "--realization", "aw", "--algebra", "uq_su2", "--j", "1/2", "--q", "2",
        "--a", "1", "--b", "2", "--c", "3", "--format", "csv",
    )
    assert code == EXIT_PASS
    assert out.splitlines() == ["n,diag,sub", "0,-5/3,0", "1,-20/3,6"]


def test_recurrence_at_an_eigenvalue(capsys):
    code, out = _run(
        capsys, "recurrence", "--realization", "aw", "--algebra", "uq_su2", "--j", "1/2", "--q", "2",
        "--a", "1", "--b", "2", "--c", "3", "--lam", "-23/3",
    )
    result = json.loads(out)["result"]
    assert code == EXIT_PASS
    assert result["characteristic_value"] == "0"
    assert result["p"] == ["1", "-6"]


def test_negative_fractions_are_values():
    args = parse_arguments([
        "verify", "--realization", "dual_hahn", "--algebra", "su2", "--j", "1",
        "--mu", "-3/2", "--nu=-1/3", "--b", "-.5", "--debug",
    ])
    assert (args.mu, args.nu, args.b) == ("-3/2", "-1/3", "-.5")
    assert args.debug


def test_spectrum(capsys):
    code, out = _run(capsys, "spectrum", "--realization", "lie_type", "--algebra", "su2", "--j", "1/2", "--b", "0")
    result = json.loads(out)["result"]
    assert code == EXIT_PASS
    assert [value[0] for value in result["eigenvalues"]] == pytest.approx([-1.0, 1.0])
    assert result["characteristic_max_abs"] < 1e-12


def test_family_list(capsys):
    code, out = _run(capsys, "family-check", "--list")
    families = json.loads(out)["result"]["families"]
    assert code == EXIT_PASS
    assert len(families) == 22
    assert {"family", "kls_section", "realization", "algebra"} <= set(families[0])


@pytest.mark.parametrize("family", ["racah", "q_racah", "wilson"])
def test_family_check_is_reproducible(capsys, family):
    argv = ["family-check", "--family", family, "--draws", "3", "--seed", "7"]
    first_code, first = _run(capsys, *argv)
    second_code, second = _run(capsys, *argv)
    assert first_code == second_code == EXIT_PASS
    assert first == second
    assert json.loads(first)["result"]["accepted"] == 3


def test_family_check_side_condition(capsys):
    code, out = _run(capsys, "family-check", "--family", "quantum_q_krawtchouk", "--j", "1", "--mu", "0",
                     "--draws", "1")
    report = json.loads(out)
    assert code == EXIT_PRECONDITION
    assert report["status"] == "error"
    assert report["error"]["error"] == "SideConditionViolated"
    assert "mu = 0" in report["error"]["message"]


def test_report_to_file(tmp_path, capsys):
    path = tmp_path / "verify.json"
    code, out = _run(capsys, "verify", *RACAH_SPIN_TWO, "--a", "7", "--out", str(path), "--timing")
    assert code == EXIT_PASS
    assert out == ""
    assert "seconds" in json.loads(path.read_text())["timing"]


def test_relative_report_path_uses_report_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("AW_FORGE_REPORT_DIR", str(tmp_path / "reports"))
    code, out = _run(capsys, "spectrum", "--realization", "lie_type", "--algebra", "su2", "--j", "1", "--b", "1/2",
                     "--out", "lie.json")
    report = json.loads((tmp_path / "reports" / "lie.json").read_text())
    assert code == EXIT_PASS
    assert out == ""
    assert report["result"]["characteristic_relative"] < 1e-8
