"""Permutations of {1..n} in one-line notation.

Words are stored 1-indexed as tuples, ``word[i - 1] == u(i)``. The
tuple-level helpers prefixed with an underscore skip validation and are
used by the hot loops in :mod:`footrule.bijections` and
:mod:`footrule.search`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from footrule.errors import EmptyInput, NotAPermutation, SizeMismatch

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}, given by its one-line word."""

    word: Word

    def __init__(self, word: Iterable[int]):
        w = tuple(int(x) for x in word)
        if not w:
            raise EmptyInput("a permutation needs at least one entry")
        if sorted(w) != list(range(1, len(w) + 1)):
            raise NotAPermutation(f"{w} is not a permutation of 1..{len(w)}")
        object.__setattr__(self, "word", w)

    @classmethod
    def _trusted(cls, word: Word) -> Permutation:
        p = object.__new__(cls)
        object.__setattr__(p, "word", word)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self, compact=True)})"

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.word, 1))


def _compose(p: Sequence[int], q: Sequence[int]) -> Word:
    return tuple([p[x - 1] for x in q])


def _inverse(p: Sequence[int]) -> Word:
    r = [0] * len(p)
    for i, x in enumerate(p, 1):
        r[x - 1] = i
    return tuple(r)


def _check_same_size(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise SizeMismatch(f"sizes differ: {p.n} vs {q.n}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p q``, the permutation ``i -> p(q(i))``."""
    _check_same_size(p, q)
    return Permutation._trusted(_compose(p.word, q.word))


def inverse(p: Permutation) -> Permutation:
    return Permutation._trusted(_inverse(p.word))


def parse(text: str) -> Permutation:
    """Parse a one-line word.

    Accepts whitespace/comma separated integers, or a bare digit string
    such as ``"3412"`` (single-digit values only).
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        raise EmptyInput("empty permutation text")
    tokens = [t for t in re.split(r"[\s,]+", s) if t]
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise NotAPermutation(f"not a list of integers: {text!r}") from None
    return Permutation(values)


def format_perm(p: Permutation, compact: bool = False) -> str:
    """Space-separated word; ``compact`` joins digits when every value is < 10."""
    if compact and p.n <= 9:
        return "".join(map(str, p.word))
    return " ".join(map(str, p.word))


def make_wn(n: int) -> Permutation:
    """The block swap ``(m+1 ... n 1 ... m)`` with ``m = n // 2``."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n // 2
    return Permutation._trusted(tuple(range(m + 1, n + 1)) + tuple(range(1, m + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n in lexicographic order."""
    from itertools import permutations

    for w in permutations(range(1, n + 1)):
        yield Permutation._trusted(w)


def cycles(p: Permutation) -> list[Word]:
    """Disjoint cycles of ``p`` (fixed points included), smallest element first."""
    seen = set()
    out = []
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = p(i)
        out.append(tuple(cyc))
    return out
