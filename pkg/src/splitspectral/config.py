"""Settings loader: config/defaults.yaml overlaid with environment variables."""
from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path

import yaml

from .errors import ConfigError

DEFAULT_PATH = Path(__file__).resolve().parents[2] / "config" / "defaults.yaml"
ENV_MAX_ENUM = "SPLIT_SPECTRAL_MAX_ENUM"

# enumeration is refused above this N no matter what the config says
HARD_MAX_ENUM_N = 28


@dataclass(frozen=True)
class Settings:
    eps_sigma: int = 0
    eps_sbar: int = 0
    max_enum_n: int = 20
    seed: int = 20150901
    format: str = "json"
    sweep_m: tuple[int, ...] = (1, 2, 3, 4)
    sweep_g: tuple[int, ...] = (2, 3, 4)
    source: str = field(default="<defaults>", compare=False)


def _bit(name: str, value) -> int:
    if value not in (0, 1):
        raise ConfigError(f"'{name}' must be 0 or 1, got {value!r}")
    return int(value)


def _int_list(name: str, value, minimum: int) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"'{name}' must be a non-empty list of integers, got {value!r}")
    out = []
    for v in value:
        if not isinstance(v, int) or v < minimum:
            raise ConfigError(f"'{name}' entries must be integers >= {minimum}, got {v!r}")
        out.append(v)
    return tuple(out)


def load_config(path: str | Path | None = None) -> Settings:
    """
    Read the YAML settings file (defaults.yaml when `path` is None) and apply
    environment overrides. A missing default file falls back to built-in values;
    a missing explicit path is an error.
    """
    cfg_path = Path(path) if path is not None else DEFAULT_PATH
    raw: dict = {}
    if cfg_path.exists():
        with cfg_path.open("r", encoding="utf-8") as fh:
            raw = yaml.safe_load(fh) or {}
        if not isinstance(raw, dict):
            raise ConfigError(f"{cfg_path} must contain a mapping, got {type(raw).__name__}")
    elif path is not None:
        raise ConfigError(f"config file not found: {cfg_path}")

    settings = Settings(source=str(cfg_path) if cfg_path.exists() else "<defaults>")
    updates: dict = {}
    if "eps_sigma" in raw:
        updates["eps_sigma"] = _bit("eps_sigma", raw["eps_sigma"])
    if "eps_sbar" in raw:
        updates["eps_sbar"] = _bit("eps_sbar", raw["eps_sbar"])
    if "max_enum_n" in raw:
        updates["max_enum_n"] = raw["max_enum_n"]
    if "seed" in raw:
        if not isinstance(raw["seed"], int):
            raise ConfigError(f"'seed' must be an integer, got {raw['seed']!r}")
        updates["seed"] = raw["seed"]
    if "format" in raw:
        if raw["format"] not in ("json", "table"):
            raise ConfigError(f"'format' must be 'json' or 'table', got {raw['format']!r}")
        updates["format"] = raw["format"]
    grid = raw.get("sweep_grid")
    if grid is not None:
        if not isinstance(grid, dict):
            raise ConfigError("'sweep_grid' must be a mapping with keys 'm' and 'g'")
        updates["sweep_m"] = _int_list("sweep_grid.m", grid.get("m"), 1)
        updates["sweep_g"] = _int_list("sweep_grid.g", grid.get("g"), 2)

    env = os.environ.get(ENV_MAX_ENUM)
    if env is not None:
        try:
            updates["max_enum_n"] = int(env)
        except ValueError as exc:
            raise ConfigError(f"{ENV_MAX_ENUM} must be an integer, got {env!r}") from exc

    settings = replace(settings, **updates)
    if not isinstance(settings.max_enum_n, int) or not 2 <= settings.max_enum_n <= HARD_MAX_ENUM_N:
        raise ConfigError(
            f"max_enum_n must be an integer in [2, {HARD_MAX_ENUM_N}], got {settings.max_enum_n!r}"
        )
    return settings
