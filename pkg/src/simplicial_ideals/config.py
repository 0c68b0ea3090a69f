"""Runtime configuration for the command line tool.

Settings resolve in precedence order: explicit command line flags, then
``SIDEAL_*`` environment variables, then a config file (``SIDEAL_CONFIG``
or ``--config``), then built-in defaults.  The file format is flat
``key = value`` lines with ``#`` comments.
"""

import os
from dataclasses import dataclass, replace

from .errors import ParameterError
from .simplicial import DEFAULT_MAX_CANDIDATES, DEFAULT_MAX_INTERSECTION_GENS

ENV_PREFIX = "SIDEAL_"


@dataclass(frozen=True)
class CliConfig:
    # enumeration budgets
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    max_intersection_gens: int = DEFAULT_MAX_INTERSECTION_GENS
    # caps on oracle-backed cross checks, which are exponential in n
    oracle_n_cap: int = 4
    oracle_m_cap: int = 12
    oracle_r_cap: int = 12
    format: str = "text"
    deep: bool = False


_INT_FIELDS = {"max_candidates", "max_intersection_gens",
               "oracle_n_cap", "oracle_m_cap", "oracle_r_cap"}
_BOOL_FIELDS = {"deep"}
_STR_FIELDS = {"format"}
_ALL_FIELDS = _INT_FIELDS | _BOOL_FIELDS | _STR_FIELDS


def _coerce(key, raw):
    if key in _INT_FIELDS:
        try:
            value = int(raw)
        except ValueError:
            raise ParameterError(f"config key {key}: expected integer, got {raw!r}")
        if value <= 0:
            raise ParameterError(f"config key {key}: must be positive, got {value}")
        return value
    if key in _BOOL_FIELDS:
        lowered = str(raw).strip().lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ParameterError(f"config key {key}: expected boolean, got {raw!r}")
    if key == "format":
        if raw not in ("text", "json"):
            raise ParameterError(f"config key format: expected text or json, got {raw!r}")
        return raw
    raise ParameterError(f"unknown config key {key!r}")


def parse_config_file(path):
    """Read ``key = value`` pairs from a file.  Unknown keys are errors."""
    settings = {}
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParameterError(f"cannot read config file {path}: {exc}")
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ParameterError(
                f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in _ALL_FIELDS:
            raise ParameterError(f"{path}:{lineno}: unknown config key {key!r}")
        settings[key] = _coerce(key, raw.strip())
    return settings


def _env_settings(environ):
    settings = {}
    for key in _ALL_FIELDS:
        raw = environ.get(ENV_PREFIX + key.upper())
        if raw is not None:
            settings[key] = _coerce(key, raw)
    return settings


def load_config(config_path=None, overrides=None, environ=None):
    """Resolve a CliConfig from all sources.

    overrides holds already-typed values from parsed flags; keys mapped to
    None are treated as unset.
    """
    if environ is None:
        environ = os.environ
    config = CliConfig()
    path = config_path or environ.get(ENV_PREFIX + "CONFIG")
    if path:
        config = replace(config, **parse_config_file(path))
    config = replace(config, **_env_settings(environ))
    if overrides:
        live = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(live) - _ALL_FIELDS
        if unknown:
            raise ParameterError(f"unknown config overrides: {sorted(unknown)}")
        config = replace(config, **live)
    for key in _INT_FIELDS:
        if getattr(config, key) <= 0:
            raise ParameterError(f"config key {key}: must be positive")
    if config.format not in ("text", "json"):
        raise ParameterError(f"format must be text or json, got {config.format!r}")
    return config
