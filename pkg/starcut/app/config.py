"""
Runtime settings for starcut.

- Defaults are tuned for desk-scale runs (graphs up to a few hundred vertices).
- Every value can be overridden by an environment variable (handy in CI):
    STARCUT_BUDGET_MS, STARCUT_NODE_LIMIT, STARCUT_THREADS,
    STARCUT_MAX_VERTICES, STARCUT_OUTPUT_DIR, STARCUT_LOG_LEVEL
- Exposes:
    - Settings: the validated settings model
    - get_settings(): reads the environment once and caches the result
"""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from starcut.app.errors import ConfigError

# Reports default to a generated-data folder outside the package.
_DEFAULT_OUTPUT_DIR = Path("data/reports")

_ENV_PREFIX = "STARCUT_"


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    budget_ms: int = Field(600_000, gt=0)
    node_limit: int = Field(200_000_000, gt=0)
    threads: int = Field(1, ge=1)
    max_vertices: int = Field(60, ge=2)
    output_dir: Path = _DEFAULT_OUTPUT_DIR
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.strip().upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return value


def _from_env() -> dict[str, str]:
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(_ENV_PREFIX + name.upper())
        if raw is not None and raw.strip():
            values[name] = raw.strip()
    return values


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    try:
        return Settings(**_from_env())
    except ValidationError as exc:
        raise ConfigError(f"invalid {_ENV_PREFIX}* environment: {exc}") from exc
