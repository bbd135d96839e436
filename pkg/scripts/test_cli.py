"""Tests for the command-line front end: outputs, exit codes and determinism."""
import io
import json

import pytest

from splitspectral import cli
from splitspectral.checks import CheckResult
from splitspectral.config import ENV_MAX_ENUM


@pytest.fixture(autouse=True)
def _clear_env(monkeypatch):
    monkeypatch.delenv(ENV_MAX_ENUM, raising=False)


def call(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def test_fiber_count_so():
    code, text = call("fiber-count", "--m", "2", "--g", "2", "--M", "2", "--group", "so")
    assert code == 0
    assert json.loads(text)["count"] == 28


def test_fiber_count_table_prints_the_number():
    code, text = call("fiber-count", "--m", "2", "--g", "2", "--M", "2", "--group", "sp", "--format", "table")
    assert code == 0
    assert text.strip() == str(28 * 2**14)


def test_sw_trivial_datum_without_spin_lift():
    code, text = call("sw", "--m", "2", "--g", "2", "--F", "0x0:14", "--D", "00000000", "--w2v", "1")
    assert code == 0
    rec = json.loads(text)
    assert rec["w1"] == "0x0:4"
    assert (rec["w2_Vplus"], rec["w2_Vminus"]) == (0, 1)
    assert rec["corollary_agrees"] is True
    assert rec["ko"]["Vminus"]["rank"] == 3


def test_check_passes_and_is_byte_identical():
    outputs = []
    for _ in range(3):
        code, text = call("check", "--m", "2", "--g", "2", "--format", "json")
        assert code == 0
        outputs.append(text)
    assert outputs[0] == outputs[1] == outputs[2]
    assert json.loads(outputs[0])["passed"] is True


def test_failed_check_row_exits_2(monkeypatch):
    monkeypatch.setattr(cli, "run_checks", lambda m, g, s: [CheckResult("broken", False, True)])
    code, text = call("check", "--m", "2", "--g", "2")
    assert code == 2
    assert json.loads(text)["passed"] is False


def test_report_contains_geometry_and_ledger():
    code, text = call("report", "--m", "2", "--g", "2")
    assert code == 0
    rec = json.loads(text)
    assert rec["geometry"]["g_S"] == 17
    assert rec["hitchin_base_dims"] == [3, 7]
    assert {e["id"] for e in rec["ledger"]} >= {"deg-U", "2g-Sbar", "residual-index"}


def test_degrees_warns_about_the_ledger(capsys):
    code, text = call("degrees", "--m", "2", "--g", "2", "--M", "0")
    assert code == 0
    rec = json.loads(text)
    assert (rec["deg_U_plus"], rec["deg_U_minus"], rec["toledo"]) == (6, 2, 2)
    assert "deg-U" in capsys.readouterr().err


def test_grade_table_format():
    code, text = call("grade", "--group", "so", "--m", "2", "--g", "2", "--format", "table")
    assert code == 0
    assert "== SOSplit m=2 g=2 ==" in text
    assert "35" in text


def test_grade_json_sp_has_reference_count():
    code, text = call("grade", "--group", "sp", "--m", "2", "--g", "2")
    assert code == 0
    rec = json.loads(text)
    assert rec["gothen_count"] == 48
    assert rec["totals"]["reconciles"] is True


def test_hitchin():
    code, text = call("hitchin", "--m", "3")
    assert code == 0
    rec = json.loads(text)
    assert rec["ok"] is True
    assert rec["bundles"]["V~"]["exponents"] == ["-2", "0", "2"]


def test_enumerate():
    code, text = call("enumerate", "--m", "1", "--g", "2")
    assert code == 0
    rec = json.loads(text)
    assert rec["count"] == 4
    assert rec["representatives"] == ["0000", "0011", "0101", "0110"]
    assert rec["matches_formula"] is True


def test_enumerate_respects_env_limit(monkeypatch):
    monkeypatch.setenv(ENV_MAX_ENUM, "8")
    code, _ = call("enumerate", "--m", "3", "--g", "2")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["degrees", "--m", "2", "--g", "2", "--M", "3"],
        ["fiber-count", "--m", "2", "--g", "2", "--M", "12", "--group", "so"],
        ["report", "--m", "0", "--g", "2"],
        ["report", "--m", "2", "--g", "2", "--bogus"],
        ["sw", "--m", "2", "--g", "2", "--F", "0x0:12", "--D", "00000000"],
        ["sw", "--m", "2", "--g", "2", "--F", "0x0:14", "--D", "10000000"],
        ["sw", "--m", "1", "--g", "2", "--F", "0x0:4", "--D", "0000", "--eps-sbar", "1"],
        ["nosuch"],
        [],
    ],
)
def test_invalid_input_exits_1(argv, capsys):
    code, _ = call(*argv)
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_help_exits_0():
    code, _ = call("--help")
    assert code == 0
