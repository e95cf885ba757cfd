import pytest

from app.models.experiment_config import ExperimentConfig
from app.tools.suite_tool import SuiteTool, random_phases
from app.utils.report_utils import build_envelope, to_json, without_timestamp


@pytest.fixture
def settings():
    return ExperimentConfig(command="suite")


def test_random_phases_are_non_degenerate():
    phases = random_phases(10, seed=0)
    assert len(phases) == 10
    assert not any(phase.is_degenerate for phase in phases)
    assert [str(p) for p in phases] == [str(p) for p in random_phases(10, seed=0)]


def test_selected_rows_pass(settings):
    summary = SuiteTool(only=["partition_of_unity", "pitt_relation", "exact_algebra", "newton_vertices"])(settings)
    assert [row.name for row in summary.rows] == ["partition_of_unity", "pitt_relation", "exact_algebra",
                                                  "newton_vertices"]
    assert summary.failed == 0


def test_perturbed_expectation_fails_the_row(settings):
    tool = SuiteTool(perturb={"witness": 1.0}, only=["witness"])
    summary = tool(settings)
    assert summary.failed == 1
    assert tool.check(summary, settings)[0].startswith("witness failed")


def test_repeated_runs_give_identical_reports(settings):
    tool = SuiteTool(only=["partition_of_unity", "pitt_relation"])
    first, second = tool(settings), tool(settings)
    assert "seconds" not in first.model_dump()
    assert all("seconds" not in row for row in first.model_dump()["rows"])
    encode = lambda summary: to_json(without_timestamp(build_envelope(summary, settings.model_dump())))
    assert encode(first) == encode(second)
    assert tool.csv_table(first) == tool.csv_table(second)


def test_unknown_rows():
    with pytest.raises(ValueError):
        SuiteTool(only=["everything"])


@pytest.mark.slow
def test_full_suite(settings):
    summary = SuiteTool()(settings)
    assert summary.failed == 0, [row.detail for row in summary.rows if not row.passed]
