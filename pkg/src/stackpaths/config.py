"""Brute-force limits and worker defaults.

All limits are plain values on a mutable module-level ``Limits`` instance so
the CLI (``--limit``, ``--jobs``) and tests can adjust them.
"""

import os
from dataclasses import dataclass, field

from .errors import ResourceLimit


def _default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


@dataclass
class Limits:
    fertility: int = 12      # preimage sweep over S_n
    histogram: int = 11      # full fertility histogram over S_n
    enumeration: int = 11    # uniquely sorted class sweeps
    paths: int = 14          # size parameter for exhaustive path generation
    jobs: int = field(default_factory=_default_jobs)


limits = Limits()


def check_limit(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise ResourceLimit(what, size, limit)


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = limits.jobs
    if jobs < 1:
        raise ValueError("jobs must be positive")
    return jobs
