import pytest

from app.config.env_config import config
from app.errors import ConfigError
from app.models.experiment_config import ExperimentConfig


def test_defaults_come_from_the_environment_config():
    settings = ExperimentConfig.from_sources(None, {"command": "analyze"})
    assert settings.res_cap == config.res_cap
    assert settings.tol == config.tol
    assert settings.lambdas() == [2.0 ** e for e in range(4, 13)]


def test_flags_override_file_values():
    settings = ExperimentConfig.from_sources({"p": "4/3", "seed": "7"}, {"command": "analyze", "p": "3", "seed": None})
    assert settings.p == "3"
    assert settings.seed == 7


def test_key_value_file(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("# decay run\nphase = x^3*y + x*y^3\nlambda-hi = 9  # short\n\n", encoding="utf-8")
    assert ExperimentConfig.read_key_value_file(path) == {"phase": "x^3*y + x*y^3", "lambda_hi": "9"}
    settings = ExperimentConfig.from_key_value_file(path, command="decay")
    assert settings.lambda_hi == 9
    assert settings.phase == "x^3*y + x*y^3"



def test_file_keys_use_flag_spelling(tmp_path):
    path = tmp_path / "check.conf"
    path.write_text("assert = true\nassert-tol = 0.5\n", encoding="utf-8")
    assert ExperimentConfig.read_key_value_file(path) == {"assertions": "true", "assert_tol": "0.5"}
    settings = ExperimentConfig.from_key_value_file(path, command="analyze")
    assert settings.assertions is True
    assert settings.assert_tol == 0.5
    assert ExperimentConfig.from_key_value_file(path, command="analyze", assertions=None).assertions is True

def test_unreadable_and_malformed_files(tmp_path):
    with pytest.raises(ConfigError):
        ExperimentConfig.read_key_value_file(tmp_path / "missing.conf")
    path = tmp_path / "bad.conf"
    path.write_text("phase x*y\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="bad.conf:1"):
        ExperimentConfig.read_key_value_file(path)


@pytest.mark.parametrize("values", [
    {"command": "plot"},
    {"command": "analyze", "colour": "red"},
    {"command": "analyze", "p": "1"},
    {"command": "analyze", "p": "1/0"},
    {"command": "analyze", "q": "two"},
    {"command": "analyze", "tol": 0.0},
    {"command": "analyze", "workers": 0},
    {"command": "analyze", "lambda_lo": 6, "lambda_hi": 6},
    {"command": "decay", "lambda_lo": 4, "lambda_hi": 7},
    {"command": "vdc", "steps": 2},
])
def test_invalid_settings(values):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_sources(None, values)


def test_steps_control_the_ladder():
    settings = ExperimentConfig.from_sources(None, {"command": "decay", "lambda_lo": 4, "lambda_hi": 6, "steps": 5})
    lambdas = settings.lambdas()
    assert len(lambdas) == 5
    assert lambdas[0] == pytest.approx(16.0)
    assert lambdas[-1] == pytest.approx(64.0)
