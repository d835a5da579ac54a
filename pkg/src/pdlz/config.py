from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Size guards shared by the generators, engines and experiments."""

    max_k: int = 30  # S_k holds 2**k bytes
    naive_max_len: int = 65536
    max_enum_len: int = 24
    rotation_max_k: int = 12


DEFAULT_LIMITS = Limits()

WORKERS_ENV = "PDLZ_WORKERS"


def default_workers() -> int:
    value = os.environ.get(WORKERS_ENV)
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1
