"""Dumont permutations and the Genocchi numbers they count.

First kind, size 2n: ``pi(2i) <= 2i <= pi(2i-1)`` for i = 1..n; there are
G_{2n+2} of them. Second kind makes the even-position bound strict,
``pi(2i) < 2i``; there are H_{2n+1} of them (Genocchi medians).
"""

from __future__ import annotations

import enum

from footrule.config import DEFAULT_CAPS
from footrule.errors import OddSize, SizeTooLarge
from footrule.perm import Permutation, Word


class DumontKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


def _check_size(size: int, cap: int | None = None) -> None:
    if size < 2 or size % 2:
        raise OddSize(f"Dumont classes need a positive even size, got {size}")
    if cap is not None and size > cap:
        raise SizeTooLarge(f"Dumont enumeration is capped at size {cap}, got {size}")


def _bounds(kind: DumontKind, size: int) -> list[tuple[int, int]]:
    strict = kind is DumontKind.SECOND
    out = []
    for p in range(1, size + 1):
        if p % 2 == 0:
            out.append((1, p - 1 if strict else p))
        else:
            out.append((p + 1, size))
    return out


def _is_dumont_word(word: Word, strict: bool) -> bool:
    for k in range(1, len(word), 2):
        even_pos = k + 1
        lower = word[k]
        if lower > even_pos or (strict and lower == even_pos):
            return False
        if word[k - 1] < even_pos:
            return False
    return True


def is_dumont(p: Permutation, kind: DumontKind) -> bool:
    _check_size(p.n)
    return _is_dumont_word(p.word, kind is DumontKind.SECOND)


def _walk(kind: DumontKind, size: int, emit) -> int:
    bounds = _bounds(kind, size)
    used = [False] * (size + 1)
    word = [0] * size

    def place(i: int) -> int:
        if i == size:
            if emit is not None:
                emit(tuple(word))
            return 1
        lo, hi = bounds[i]
        total = 0
        for x in range(lo, hi + 1):
            if not used[x]:
                used[x] = True
                word[i] = x
                total += place(i + 1)
                used[x] = False
        return total

    return place(0)


def enumerate_dumont(kind: DumontKind, size: int, cap: int = DEFAULT_CAPS.dumont) -> list[Permutation]:
    """Lexicographically sorted members of B_size (first kind) or C_size (second kind)."""
    _check_size(size, cap)
    out: list[Permutation] = []
    _walk(kind, size, lambda w: out.append(Permutation._trusted(w)))
    return out


def genocchi_value(kind: DumontKind, size: int, cap: int = DEFAULT_CAPS.dumont) -> int:
    """``#B_size = G_{size+2}`` or ``#C_size = H_{size+1}``, counted by enumeration."""
    _check_size(size, cap)
    return _walk(kind, size, None)


def genocchi_label(kind: DumontKind, size: int) -> str:
    return f"G_{size + 2}" if kind is DumontKind.FIRST else f"H_{size + 1}"
