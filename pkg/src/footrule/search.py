"""Exhaustive search for the largest segment [id, u] in S_n."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations

from footrule.config import DEFAULT_CAPS
from footrule.dumont import DumontKind, genocchi_value
from footrule.errors import SizeTooLarge
from footrule.metric import _count_dp, _profile, count_segment
from footrule.parallel import map_shards
from footrule.perm import Permutation, Word, make_wn


@dataclass
class SearchReport:
    n: int
    max_cardinality: int
    argmax: list[Permutation]
    wn_is_argmax: bool
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_cardinality": self.max_cardinality,
            "argmax": [list(p.word) for p in self.argmax],
            "wn_is_argmax": self.wn_is_argmax,
            "elapsed": self.elapsed,
        }


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    holds: bool
    max_cardinality: int
    expected: int


def _search_shard(args: tuple[int, int]) -> tuple[int, list[Word]]:
    n, first = args
    best = 0
    winners: list[Word] = []
    rest = [x for x in range(1, n + 1) if x != first]
    for tail in permutations(rest):
        u = (first,) + tail
        c = _count_dp(_profile(u))
        if c > best:
            best, winners = c, [u]
        elif c == best:
            winners.append(u)
    return best, winners


def max_segment_search(
    n: int,
    cap: int = DEFAULT_CAPS.search,
    allow_large: bool = False,
    jobs: int = 1,
) -> SearchReport:
    """Count [id, u] for every u in S_n and keep the maximisers.

    Sizes above ``cap`` need ``allow_large`` and remain bounded by the
    override cap.
    """
    limit = DEFAULT_CAPS.search_override if allow_large else cap
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise SizeTooLarge(f"search is capped at n={limit}, got n={n}")
    start = time.perf_counter()
    results = map_shards(_search_shard, [(n, f) for f in range(1, n + 1)], jobs)
    best = max(r[0] for r in results)
    # shards are ordered by u(1) and each is lexicographic, so this stays sorted
    argmax = [Permutation._trusted(w) for b, ws in results if b == best for w in ws]
    wn = make_wn(n)
    return SearchReport(
        n=n,
        max_cardinality=best,
        argmax=argmax,
        wn_is_argmax=wn in set(argmax),
        elapsed=time.perf_counter() - start,
    )


def expected_genocchi(n: int) -> int:
    """Genocchi value predicted for ``#[id, w_n]``, taken from the Dumont counts."""
    m, odd = divmod(n, 2)
    if odd:
        return genocchi_value(DumontKind.FIRST, 2 * m + 2)
    return genocchi_value(DumontKind.SECOND, 2 * m + 2)


def conjecture_check(
    n_max: int,
    cap: int = DEFAULT_CAPS.search,
    allow_large: bool = False,
    jobs: int = 1,
) -> list[ConjectureRow]:
    rows = []
    for n in range(1, n_max + 1):
        report = max_segment_search(n, cap=cap, allow_large=allow_large, jobs=jobs)
        wn_count = count_segment(make_wn(n)).count
        expected = expected_genocchi(n)
        holds = report.wn_is_argmax and report.max_cardinality == wn_count == expected
        rows.append(ConjectureRow(n, holds, report.max_cardinality, expected))
    return rows
