"""Process-wide numeric defaults (precision, default N, thread count)."""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

from .errors import ConfigError

PRECISION_ENV = "FIBDIR_PRECISION_BITS"


def _env_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return 128
    try:
        bits = int(raw)
    except ValueError:
        raise ConfigError(f"{PRECISION_ENV}={raw!r} is not an integer") from None
    if bits < 64:
        raise ConfigError(f"{PRECISION_ENV} must be >= 64, got {bits}")
    return bits


@dataclass(frozen=True)
class Settings:
    precision_bits: int = 128
    terms: int = 10**6
    tol: float = 1e-6
    threads: int = 1

    def validate(self) -> "Settings":
        if self.precision_bits < 64:
            raise ConfigError("precision_bits must be >= 64")
        if not 10 <= self.terms <= 10**8:
            raise ConfigError("terms must lie in [10, 1e8]")
        if not 0 < self.tol < 1:
            raise ConfigError("tol must lie in (0, 1)")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        return self


_current = Settings(precision_bits=_env_precision(), threads=os.cpu_count() or 1)


def get() -> Settings:
    return _current


@contextmanager
def override(**changes):
    """Temporarily replace fields of the active settings."""
    global _current
    saved = _current
    _current = replace(_current, **{k: v for k, v in changes.items() if v is not None}).validate()
    try:
        yield _current
    finally:
        _current = saved
