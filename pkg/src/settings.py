"""Configuration helpers for environment-backed run settings."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from .constants import SCHEME_PROPOSED, SCHEMES

LOG_FORMAT = "%(asctime)s - [%(levelname)s] - %(name)s - %(message)s"


@dataclass(frozen=True)
class RDHSettings:
    """Normalized collection of run settings."""

    seed: int
    scheme: str
    workers: int
    log_level: str
    timing: bool

    def apply(self) -> None:
        """Push the configured log level into the logging system."""
        logging.basicConfig(level=self.log_level, format=LOG_FORMAT)
        logging.getLogger().setLevel(self.log_level)

    def override(self, **values: Optional[object]) -> "RDHSettings":
        """Return a copy with every non-None keyword replacing the stored value."""
        changes = {key: value for key, value in values.items() if value is not None}
        if "scheme" in changes:
            _check_scheme(str(changes["scheme"]))
        if "log_level" in changes:
            changes["log_level"] = _check_level(str(changes["log_level"]))
        return replace(self, **changes)


def _check_scheme(scheme: str) -> str:
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
    return scheme


def _check_level(level: str) -> str:
    level = level.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"unknown log level {level!r}")
    return level


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def load_settings() -> RDHSettings:
    """Load run settings from the environment with sensible defaults."""
    seed = _int_env("RDH_SEED", 0)
    if seed < 0:
        raise ValueError("RDH_SEED must be non-negative")
    workers = max(1, _int_env("RDH_WORKERS", 1))
    scheme = _check_scheme(os.getenv("RDH_SCHEME") or SCHEME_PROPOSED)
    log_level = _check_level(os.getenv("RDH_LOG_LEVEL") or "WARNING")
    timing = (os.getenv("RDH_TIMING") or "0").strip().lower() in ("1", "true", "yes")
    return RDHSettings(
        seed=seed,
        scheme=scheme,
        workers=workers,
        log_level=log_level,
        timing=timing,
    )


__all__ = ["LOG_FORMAT", "RDHSettings", "load_settings"]
