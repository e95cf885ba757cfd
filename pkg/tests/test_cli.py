import json

import pytest

from app.cli import main


def run(argv, out_dir):
    return main(argv + ["--out", str(out_dir)])


def test_analyze_writes_the_envelope(out_dir, capsys):
    assert run(["analyze", "--phase", "x^3*y + x*y^3"], out_dir) == 0
    envelope = json.loads((out_dir / "analyze.json").read_text(encoding="utf-8"))
    assert envelope["report"]["lp_range"] == ["4/3", "4"]
    assert envelope["config"]["phase"] == "x^3*y + x*y^3"
    assert json.loads(capsys.readouterr().out)["report"]["n"] == 4


def test_syntax_error_points_at_the_offset(out_dir, capsys):
    assert run(["analyze", "--phase", "x^*y"], out_dir) == 2
    err = capsys.readouterr().err
    assert "position 2" in err
    assert "    ^" in err


@pytest.mark.parametrize("argv", [
    ["analyze"],
    ["analyze", "--phase", "x*y", "--p", "1"],
    ["pitt", "--p", "2"],
])
def test_input_errors_exit_2(out_dir, argv):
    assert run(argv, out_dir) == 2


def test_failed_assertion_exits_3(out_dir):
    argv = ["pitt", "--p", "2", "--q", "4", "--alpha", "1/8", "--assert", "--assert-tol", "100"]
    assert run(argv, out_dir) == 3
    assert (out_dir / "pitt.json").exists()


def test_balanced_pitt_assertion_passes(out_dir):
    assert run(["pitt", "--p", "2", "--q", "2", "--assert"], out_dir) == 0


def test_config_file(tmp_path, out_dir):
    path = tmp_path / "analyze.conf"
    path.write_text("phase = x^4*y + x*y^4\n", encoding="utf-8")
    assert run(["analyze", "--config", str(path)], out_dir) == 0
    envelope = json.loads((out_dir / "analyze.json").read_text(encoding="utf-8"))
    assert envelope["report"]["n"] == 5


def test_witness_writes_a_table(out_dir):
    assert run(["witness", "--n", "3", "--lambda-lo", "4", "--lambda-hi", "7"], out_dir) == 0
    assert (out_dir / "witness.csv").exists()
