"""Ordered fan-out over shards; results come back in submission order."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def map_shards(fn: Callable[[T], R], shards: Sequence[T], jobs: int = 1) -> list[R]:
    if jobs <= 1 or len(shards) <= 1:
        return [fn(s) for s in shards]
    with ProcessPoolExecutor(max_workers=min(jobs, len(shards))) as pool:
        return list(pool.map(fn, shards))
