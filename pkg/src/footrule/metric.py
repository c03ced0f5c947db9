"""The l1 (Spearman footrule) distance and its metric segments [id, u]."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass

from footrule.config import DEFAULT_CAPS
from footrule.errors import SizeTooLarge, UnknownBackend
from footrule.perm import (
    Permutation,
    Word,
    _check_same_size,
    _compose,
    _inverse,
)


class Backend(enum.Enum):
    BITMASK_DP = "dp"
    BACKTRACKING = "bt"

    @classmethod
    def coerce(cls, value: Backend | str) -> Backend:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnknownBackend(f"unknown backend {value!r}; use 'dp' or 'bt'") from None


@dataclass(frozen=True)
class CountResult:
    count: int
    backend: Backend


@dataclass(frozen=True)
class IntervalProfile:
    """Admissible values per position: ``lo_i <= v(i) <= hi_i``."""

    intervals: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.intervals)

    def contains(self, v: Permutation) -> bool:
        return _fits(self.intervals, v.word)

    def width(self) -> int:
        return sum(hi - lo for lo, hi in self.intervals)


def distance(u: Permutation, v: Permutation) -> int:
    _check_same_size(u, v)
    return sum(abs(a - b) for a, b in zip(u.word, v.word))


def _profile(word: Word) -> tuple[tuple[int, int], ...]:
    return tuple((min(i, x), max(i, x)) for i, x in enumerate(word, 1))


def _fits(intervals, word) -> bool:
    for (lo, hi), x in zip(intervals, word):
        if x < lo or x > hi:
            return False
    return True


def segment_profile(u: Permutation) -> IntervalProfile:
    return IntervalProfile(_profile(u.word))


def in_segment(v: Permutation, u: Permutation) -> bool:
    """True iff ``v`` lies in [id, u], tested coordinatewise."""
    _check_same_size(v, u)
    return _fits(_profile(u.word), v.word)


def in_segment_by_distance(v: Permutation, u: Permutation) -> bool:
    """Membership straight from ``D(id, v) + D(v, u) == D(id, u)``."""
    ident = Permutation.identity(u.n)
    return distance(ident, v) + distance(v, u) == distance(ident, u)


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeTooLarge(f"{what} is capped at n={cap}, got n={n}")


def enumerate_segment(u: Permutation, cap: int = DEFAULT_CAPS.enumeration) -> list[Permutation]:
    """All of [id, u], sorted lexicographically."""
    _check_cap(u.n, cap, "segment enumeration")
    intervals = _profile(u.word)
    n = len(intervals)
    out: list[Permutation] = []
    word = [0] * n
    used = [False] * (n + 1)

    # values tried in increasing order, so output is already lexicographic
    def place(i: int) -> None:
        if i == n:
            out.append(Permutation._trusted(tuple(word)))
            return
        lo, hi = intervals[i]
        for x in range(lo, hi + 1):
            if not used[x]:
                used[x] = True
                word[i] = x
                place(i + 1)
                used[x] = False

    place(0)
    return out


def _count_dp(intervals) -> int:
    """Sparse subset DP: states are bitmasks of values already placed."""
    n = len(intervals)
    # values whose last admissible position is i must be used by then
    last_pos = [-1] * n
    for i, (lo, hi) in enumerate(intervals):
        for x in range(lo - 1, hi):
            last_pos[x] = i
    must = [0] * n
    for x, i in enumerate(last_pos):
        if i < 0:
            return 0
        must[i] |= 1 << x
    for i in range(1, n):
        must[i] |= must[i - 1]

    states = {0: 1}
    for i, (lo, hi) in enumerate(intervals):
        allowed = ((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1)
        need = must[i]
        nxt: dict[int, int] = defaultdict(int)
        for mask, c in states.items():
            free = allowed & ~mask
            while free:
                bit = free & -free
                free ^= bit
                m2 = mask | bit
                if m2 & need == need:
                    nxt[m2] += c
        states = nxt
        if not states:
            return 0
    return sum(states.values())


def _count_bt(intervals) -> int:
    n = len(intervals)
    used = [False] * (n + 2)

    def walk(i: int) -> int:
        if i == n:
            return 1
        lo, hi = intervals[i]
        total = 0
        for x in range(lo, hi + 1):
            if not used[x]:
                used[x] = True
                total += walk(i + 1)
                used[x] = False
        return total

    return walk(0)


def count_segment(
    u: Permutation,
    backend: Backend | str = Backend.BITMASK_DP,
    cap: int | None = None,
) -> CountResult:
    """Exact ``#[id, u]``.

    ``cap`` overrides the backend's default size limit.
    """
    backend = Backend.coerce(backend)
    intervals = _profile(u.word)
    if backend is Backend.BITMASK_DP:
        _check_cap(u.n, cap or DEFAULT_CAPS.bitmask_dp, "bitmask DP counting")
        return CountResult(_count_dp(intervals), backend)
    _check_cap(u.n, cap or DEFAULT_CAPS.backtracking, "backtracking counting")
    return CountResult(_count_bt(intervals), backend)


def count_between(w: Permutation, u: Permutation, backend: Backend | str = Backend.BITMASK_DP) -> CountResult:
    """``#[w, u]``, reduced to ``#[id, u w^-1]`` by right invariance."""
    _check_same_size(w, u)
    return count_segment(Permutation._trusted(_compose(u.word, _inverse(w.word))), backend)


def enumerate_between(w: Permutation, u: Permutation, cap: int = DEFAULT_CAPS.enumeration) -> list[Permutation]:
    _check_same_size(w, u)
    shifted = Permutation._trusted(_compose(u.word, _inverse(w.word)))
    return sorted(Permutation._trusted(_compose(v.word, w.word)) for v in enumerate_segment(shifted, cap))
