"""Configuration loading for mini-mode."""

import json
import os
from pathlib import Path
from typing import Any

import yaml

from minimode import global_config_dir
from minimode.exceptions import InvalidConfig
from minimode.utils.serialize import recursive_merge

builtin_config_dir = Path(__file__).parent


def get_config_path(config_spec: str | Path) -> Path:
    """Resolve a config spec to an actual file path.

    Searches: literal path, MINIMODE_CONFIG_DIR, the global config dir, then the
    built-in config dir.
    """
    config_spec = Path(config_spec)
    if config_spec.suffix not in (".yaml", ".yml"):
        config_spec = config_spec.with_suffix(".yaml")
    candidates = [
        config_spec,
        Path(os.getenv("MINIMODE_CONFIG_DIR", ".")) / config_spec,
        global_config_dir / config_spec,
        builtin_config_dir / config_spec,
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    raise InvalidConfig(f"Could not find config file for {config_spec} (tried: {candidates})")


def _key_value_spec_to_nested_dict(config_spec: str) -> dict:
    """Parse 'key.subkey=value' into a nested dict.

    Example: "estimators.fsmw.p=0.1" -> {"estimators": {"fsmw": {"p": 0.1}}}
    """
    key, value = config_spec.split("=", 1)
    try:
        value = json.loads(value)
    except json.JSONDecodeError:
        pass
    keys = key.split(".")
    result: dict = {}
    current = result
    for k in keys[:-1]:
        current[k] = {}
        current = current[k]
    current[keys[-1]] = value
    return result


def get_config_from_spec(config_spec: str | Path) -> dict:
    """Load a config from a file path, filename, or key=value spec."""
    if isinstance(config_spec, str) and "=" in config_spec:
        return _key_value_spec_to_nested_dict(config_spec)
    path = get_config_path(config_spec)
    try:
        loaded = yaml.safe_load(path.read_text())
    except yaml.YAMLError as exc:
        raise InvalidConfig(f"{path}: {exc}") from exc
    if loaded is None:
        return {}
    if not isinstance(loaded, dict):
        raise InvalidConfig(f"{path}: top level must be a mapping")
    return loaded


def build_config(specs: list[str] | None = None, *overrides: dict[str, Any]) -> dict:
    """Merge default.yaml, each spec in order, then the override dicts.

    UNSET values in the overrides are skipped, so CLI flags the user did not
    pass leave config values alone.
    """
    layers = [get_config_from_spec("default")]
    layers += [get_config_from_spec(spec) for spec in specs or []]
    return recursive_merge(*layers, *overrides)


__all__ = ["build_config", "builtin_config_dir", "get_config_from_spec", "get_config_path"]
