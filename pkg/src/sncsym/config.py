#!/usr/bin/env python3
"""
Runtime settings for sncsym.

Settings come from three layers, later ones winning: built-in defaults, an
optional JSON settings file, and SNCSYM_* environment variables. The CLI
applies its own flags on top.
"""

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from .errors import SncsymError

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")

ENV_PREFIX = "SNCSYM_"


@dataclass(frozen=True)
class Settings:
    """Defaults shared by the library and the command line"""

    # oracle variable budget is N = n + m + extra_vars
    extra_vars: int = 1
    max_degree: int = 3
    output_format: str = "text"
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.extra_vars < 0:
            raise SncsymError(f"extra_vars must be nonnegative, got {self.extra_vars}")
        if self.max_degree < 0:
            raise SncsymError(f"max_degree must be nonnegative, got {self.max_degree}")
        if self.output_format not in FORMATS:
            raise SncsymError(
                f"output_format must be one of {', '.join(FORMATS)}, got {self.output_format!r}")

    def num_vars(self, n: int, m: int) -> int:
        """Default oracle variable budget for bidegree (n, m)"""
        return max(1, n + m + self.extra_vars)

    def updated(self, **changes: Any) -> "Settings":
        """Copy with the non-None entries of changes applied"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "Settings":
        known = {f.name: f.type for f in fields(cls)}
        values: Dict[str, Any] = {}
        for key, value in data.items():
            if key not in known:
                logger.warning("Ignoring unknown setting %r", key)
                continue
            values[key] = int(value) if key in ("extra_vars", "max_degree") else str(value)
        return cls(**values)

    @classmethod
    def load(cls, path: Optional[str] = None,
             environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Build settings from an optional JSON file and the environment"""
        environ = os.environ if environ is None else environ
        data: Dict[str, Any] = {}

        path = path or environ.get(ENV_PREFIX + "CONFIG")
        if path:
            config_path = Path(path)
            try:
                with open(config_path, 'r') as f:
                    loaded = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise SncsymError(f"Cannot read settings file {config_path}: {e}")
            if not isinstance(loaded, dict):
                raise SncsymError(f"Settings file {config_path} must contain a JSON object")
            data.update(loaded)
            logger.debug("Loaded settings from %s", config_path)

        env_keys = {
            "EXTRA_VARS": "extra_vars",
            "MAX_DEGREE": "max_degree",
            "FORMAT": "output_format",
            "LOG_LEVEL": "log_level",
        }
        for suffix, key in env_keys.items():
            value = environ.get(ENV_PREFIX + suffix)
            if value:
                data[key] = value

        try:
            return cls.from_mapping(data)
        except ValueError as e:
            raise SncsymError(f"Invalid settings value: {e}")


DEFAULT_SETTINGS = Settings()
