"""Run configuration: flag > ``JLK_*`` environment variable > key=value file > default."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .stanley import D_CONVENTIONS, TABLES

ENV_PREFIX = "JLK_"
DEFAULT_CONFIG_PATH = Path.home() / ".config" / "jacklr" / "config"
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "jacklr"
FORMATS = ("json", "text")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_weight: int = 14
    max_weight_qt: int = 8
    cache_dir: str = str(DEFAULT_CACHE_DIR)
    use_cache: bool = False
    workers: int = 1
    format: str | None = None  # None: each command picks its own
    d_convention: str = "minus"
    table: str = "printed"

    def __post_init__(self):
        if self.max_weight < 0 or self.max_weight_qt < 0:
            raise ConfigError("weights must be non-negative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.format is not None and self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.d_convention not in D_CONVENTIONS:
            raise ConfigError(f"d-convention must be one of {D_CONVENTIONS}")
        if self.table not in TABLES:
            raise ConfigError(f"table must be one of {TABLES}")


_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(key: str, raw: str):
    kind = _TYPES[key]
    try:
        if kind == "int":
            return int(raw)
        if kind == "bool":
            low = raw.strip().lower()
            if low in ("1", "true", "yes", "on"):
                return True
            if low in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)
    except ValueError:
        raise ConfigError(f"bad value for {key}: {raw!r}") from None
    return raw.strip()


def _normalize_key(key: str) -> str:
    key = key.strip().lower().replace("-", "_")
    if key not in _TYPES:
        raise ConfigError(f"unknown configuration key {key!r}")
    return key


def read_config_file(path) -> dict:
    out = {}
    path = Path(path)
    if not path.is_file():
        return out
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key = _normalize_key(key)
        out[key] = _coerce(key, value)
    return out


def read_env(environ=None) -> dict:
    environ = os.environ if environ is None else environ
    out = {}
    for name, value in environ.items():
        if not name.startswith(ENV_PREFIX) or name == ENV_PREFIX + "CONFIG":
            continue
        key = _normalize_key(name[len(ENV_PREFIX) :])
        out[key] = _coerce(key, value)
    return out


def load_config(flags: dict | None = None, environ=None, path=None) -> RunConfig:
    """Merge the layers; ``flags`` entries that are ``None`` are treated as unset."""
    environ = os.environ if environ is None else environ
    if path is None:
        path = environ.get(ENV_PREFIX + "CONFIG", DEFAULT_CONFIG_PATH)
    merged = {}
    merged.update(read_config_file(path))
    merged.update(read_env(environ))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    try:
        return replace(RunConfig(), **merged)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None
