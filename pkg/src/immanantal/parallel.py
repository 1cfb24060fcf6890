"""Deterministic fan-out helper for independent exact-arithmetic work units.

Results are always collected in input order, so output is bit-identical no
matter how many workers run or how the scheduler interleaves them. Worker
count defaults to the IMMANANT_THREADS environment variable (1 if unset).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_THREADS = "IMMANANT_THREADS"


def worker_count(requested: int | None = None) -> int:
    """Resolve an effective worker count (>= 1)."""
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get(ENV_THREADS)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{ENV_THREADS} must be an integer, got {env!r}") from None
    return 1


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Map ``fn`` over ``items``, preserving order.

    With one worker this is a plain loop; otherwise a thread pool. All uses
    in this package are pure functions of their arguments, so the two modes
    return identical values.
    """
    seq: Sequence[T] = items if isinstance(items, Sequence) else list(items)
    w = worker_count(workers)
    if w <= 1 or len(seq) <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=min(w, len(seq))) as pool:
        return list(pool.map(fn, seq))
