"""
Run Configuration
=================
Loads config/run_config.json and applies command-line overrides.

Usage:
    config = load_run_config()                         # defaults from config/
    config = load_run_config(overrides={'theta': '0.4'})
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace
from enum import Enum
from fractions import Fraction
from typing import Optional

from parasim.contradiction import DEFAULT_ENUMERATE_LIMIT, RepairPolicy
from parasim.errors import ConfigError
from parasim.hierarchy import THETA_MAX, THETA_MIN, ClusterMode, exact_fraction


# ============================================================================
# CONFIGURATION FILES
# ============================================================================

def get_project_root():
    """Get the project root directory (normalized for Windows)."""
    return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))


def get_config_path(filename):
    return os.path.join(get_project_root(), 'config', filename)


def read_json_config(path):
    """Read one JSON config file; a missing file yields an empty dict."""
    if not os.path.exists(path):
        return {}
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(os.path.basename(path), f"invalid JSON ({e})") from e
    except OSError as e:
        raise ConfigError(os.path.basename(path), str(e)) from e

    if not isinstance(data, dict):
        raise ConfigError(os.path.basename(path), "top level must be an object")
    return data


# ============================================================================
# RUN CONFIG
# ============================================================================

class OutputFormat(Enum):
    HUMAN = 'human'
    TSV = 'tsv'
    STRUCTURED = 'structured'


@dataclass(frozen=True)
class RunConfig:
    theta: Fraction = Fraction(2, 5)
    mode: ClusterMode = ClusterMode.CONNECTED_COMPONENTS
    repair_policy: RepairPolicy = RepairPolicy.DROP_NEGATIVE
    output_format: OutputFormat = OutputFormat.HUMAN
    decimal_precision: int = 2
    enumerate_limit: int = DEFAULT_ENUMERATE_LIMIT
    strict_repairability: bool = False


def parse_fraction(key, value) -> Fraction:
    """Exact rational from '0.4', '2/5', 0.4-as-text or an int."""
    if isinstance(value, bool):
        raise ConfigError(key, f"expected a number, got {value!r}")
    try:
        return exact_fraction(value if isinstance(value, (int, float, Fraction)) else str(value))
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ConfigError(key, f"not a rational number: {value!r}") from e


def _enum(key, enum_cls, value):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(str(value).strip().lower().replace('-', '_'))
    except ValueError as e:
        allowed = ', '.join(member.value for member in enum_cls)
        raise ConfigError(key, f"{value!r} is not one of: {allowed}") from e


def _int(key, value):
    if isinstance(value, bool):
        raise ConfigError(key, f"expected an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise ConfigError(key, f"expected an integer, got {value!r}") from e


def _coerce(key, value):
    if key == 'theta':
        return parse_fraction(key, value)
    if key == 'mode':
        return _enum(key, ClusterMode, value)
    if key == 'repair_policy':
        return _enum(key, RepairPolicy, value)
    if key == 'output_format':
        return _enum(key, OutputFormat, value)
    if key in ('decimal_precision', 'enumerate_limit'):
        return _int(key, value)
    if key == 'strict_repairability':
        if not isinstance(value, bool):
            raise ConfigError(key, f"expected true or false, got {value!r}")
        return value
    raise ConfigError(key, "unknown setting")


def validate_run_config(config: RunConfig) -> RunConfig:
    if not THETA_MIN <= config.theta <= THETA_MAX:
        raise ConfigError('theta', f"must lie in [-1, 1], got {config.theta}")
    if config.decimal_precision < 0:
        raise ConfigError('decimal_precision', f"must be >= 0, got {config.decimal_precision}")
    if config.enumerate_limit < 1:
        raise ConfigError('enumerate_limit', f"must be >= 1, got {config.enumerate_limit}")
    if config.repair_policy is RepairPolicy.MANUAL:
        raise ConfigError('repair_policy', "'manual' is not a default policy")
    return config


def load_run_config(path: Optional[str] = None, overrides: Optional[dict] = None) -> RunConfig:
    """
    Defaults, then the JSON file, then overrides (None values are skipped).

    Keys starting with '_' in the file are comments.
    """
    if path and not os.path.exists(path):
        raise ConfigError(os.path.basename(path), "file not found")
    data = read_json_config(path or get_config_path('run_config.json'))

    config = apply_overrides(RunConfig(), data)
    return apply_overrides(config, overrides or {})


def apply_overrides(config: RunConfig, overrides: dict) -> RunConfig:
    known = {f.name for f in fields(RunConfig)}
    values = {}

    for key, value in overrides.items():
        if key.startswith('_') or value is None:
            continue
        if key not in known:
            raise ConfigError(key, "unknown setting")
        values[key] = _coerce(key, value)

    return validate_run_config(replace(config, **values))
