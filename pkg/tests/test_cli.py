import json
from pathlib import Path

import pytest

from skewverify.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("rel_u_cubed")


def test_list_json(capsys):
    assert main(["list", "--format", "json"]) == 0
    names = [c["name"] for c in json.loads(capsys.readouterr().out)]
    assert "t_central" in names


def test_check_pass(capsys):
    assert main(["check", "norm_pi_is_7"]) == 0
    assert "N(π) = 7" in capsys.readouterr().out


def test_check_json(capsys):
    assert main(["check", "mu_3_in_F7", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "pass"


def test_unknown_check_exit_code(capsys):
    assert main(["check", "nope"]) == 2
    assert "unknown check" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["all", "--trials", "0"], ["check", "norm_pi_is_7", "--precision", "-1"],
     ["all", "--seed", "-1"], ["list", "--seed", str(2**64)]])
def test_nonpositive_options(argv, capsys):
    assert main(argv) == 2


def test_bad_override_file(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("[", encoding="utf-8")
    assert main(["check", "rel_u_cubed", "--constants", str(p)]) == 2
    assert main(["check", "rel_u_cubed", "--constants", str(tmp_path / "missing.json")]) == 2


def test_lambda_override_fails_check(capsys):
    assert main(["check", "rel_u_cubed", "--constants", str(DATA / "lambda_one.json")]) == 1


def test_tabulated_d_fails_d_fixed(capsys):
    assert main(["check", "rel_d_fixed", "--constants", str(DATA / "d_tabulated.json")]) == 1


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
