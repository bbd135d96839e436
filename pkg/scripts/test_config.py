"""Tests for the YAML settings loader."""
import pytest

from splitspectral.config import DEFAULT_PATH, ENV_MAX_ENUM, HARD_MAX_ENUM_N, Settings, load_config
from splitspectral.errors import ConfigError


@pytest.fixture(autouse=True)
def _clear_env(monkeypatch):
    monkeypatch.delenv(ENV_MAX_ENUM, raising=False)


def test_defaults_file_is_loaded():
    assert DEFAULT_PATH.exists()
    s = load_config()
    assert s == Settings()
    assert s.source == str(DEFAULT_PATH)
    assert s.sweep_m == (1, 2, 3, 4)


def test_env_overrides_max_enum(monkeypatch):
    monkeypatch.setenv(ENV_MAX_ENUM, "12")
    assert load_config().max_enum_n == 12


@pytest.mark.parametrize("value", ["abc", "1", str(HARD_MAX_ENUM_N + 2)])
def test_bad_env_values(monkeypatch, value):
    monkeypatch.setenv(ENV_MAX_ENUM, value)
    with pytest.raises(ConfigError):
        load_config()


def test_custom_file(tmp_path):
    path = tmp_path / "cfg.yaml"
    path.write_text("eps_sigma: 1\nformat: table\nsweep_grid:\n  m: [2]\n  g: [2, 3]\n", encoding="utf-8")
    s = load_config(path)
    assert (s.eps_sigma, s.format, s.sweep_m, s.sweep_g) == (1, "table", (2,), (2, 3))
    assert s.eps_sbar == 0


@pytest.mark.parametrize(
    "text",
    [
        "eps_sigma: 2\n",
        "format: csv\n",
        "seed: abc\n",
        "sweep_grid:\n  m: [0]\n  g: [2]\n",
        "sweep_grid: [1, 2]\n",
        "- just\n- a list\n",
    ],
)
def test_invalid_files(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(path)


def test_missing_explicit_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.yaml")
