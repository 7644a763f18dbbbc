"""Deterministic range-split map-reduce over enumeration streams."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

THREADS_ENV = "CYCLEKIT_THREADS"


def default_workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    bounds, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def map_reduce(func: Callable[..., Counter], args: tuple, total: int, workers: int | None = None, chunks: int | None = None) -> Counter:
    """Sum ``func(*args, start, stop)`` over a partition of ``range(total)``.

    The reduction is an exact Counter sum, so the result does not depend on
    ``workers`` or ``chunks``.
    """
    workers = default_workers() if workers is None else max(1, workers)
    if chunks is None:
        chunks = 1 if workers == 1 else 4 * workers
    ranges = split_range(total, chunks)
    result: Counter = Counter()
    if workers == 1 or len(ranges) == 1:
        for lo, hi in ranges:
            result.update(func(*args, lo, hi))
        return result
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, *args, lo, hi) for lo, hi in ranges]
        for fut in futures:
            result.update(fut.result())
    return result
