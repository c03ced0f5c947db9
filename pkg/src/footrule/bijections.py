"""The insertion maps rho and eta and the segment-to-Dumont bijections g, h.

For n = 2m+1, ``g(u) = rho(alpha u^-1 beta^-1)`` carries [id, w_n] onto the
first-kind class B_{2m+2}; for n = 2m, ``h(u) = eta(alpha u^-1 beta^-1)``
carries [id, w_n] onto the second-kind class C_{2m+2}.
"""

from __future__ import annotations

import enum
import time
from dataclasses import asdict, dataclass, field
from itertools import permutations
from math import factorial

from footrule.config import DEFAULT_CAPS
from footrule.dumont import DumontKind, _is_dumont_word, enumerate_dumont
from footrule.errors import EvenSize, InvalidM, OddSize, SizeTooLarge
from footrule.metric import _fits, _profile
from footrule.parallel import map_shards
from footrule.perm import Permutation, Word, _compose, _inverse, make_wn


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class ParityContext:
    m: int
    parity: Parity
    alpha: Permutation
    beta: Permutation

    @property
    def n(self) -> int:
        return 2 * self.m + 1 if self.parity is Parity.ODD else 2 * self.m


def make_context(m: int, parity: Parity | str) -> ParityContext:
    parity = Parity(parity)
    if parity is Parity.ODD:
        if m < 0:
            raise InvalidM(f"odd case needs m >= 0, got {m}")
        odds = list(range(1, 2 * m + 2, 2))
        evens = list(range(2, 2 * m + 1, 2))
        alpha = odds + evens
        beta = evens + [2 * m + 1] + list(range(1, 2 * m, 2))
    else:
        if m < 1:
            raise InvalidM(f"even case needs m >= 1, got {m}")
        odds = list(range(1, 2 * m, 2))
        evens = list(range(2, 2 * m + 1, 2))
        alpha = odds + evens
        beta = list(range(3, 2 * m, 2)) + [1, 2 * m] + list(range(2, 2 * m - 1, 2))
    return ParityContext(m, parity, Permutation(alpha), Permutation(beta))


def _rho(word: Word) -> Word:
    return word[:-1] + (len(word) + 1, word[-1])


def _eta(word: Word) -> Word:
    n = len(word)
    out = [word[0] + 1, 1]
    out.extend(x + 1 for x in word[1:-1])
    out.append(n + 2)
    out.append(word[-1] + 1)
    return tuple(out)


def rho(u: Permutation) -> Permutation:
    """Insert ``n+1`` just before the last entry of an odd-size word."""
    if u.n % 2 == 0:
        raise EvenSize(f"rho is defined on odd sizes, got {u.n}")
    return Permutation._trusted(_rho(u.word))


def eta(u: Permutation) -> Permutation:
    """``(u1+1, 1, u2+1, ..., u_{2m-1}+1, 2m+2, u_{2m}+1)``."""
    if u.n % 2:
        raise OddSize(f"eta is defined on even sizes, got {u.n}")
    return Permutation._trusted(_eta(u.word))


def _conjugated(ctx: ParityContext, word: Word) -> Word:
    # alpha u^-1 beta^-1
    return _compose(ctx.alpha.word, _compose(_inverse(word), _inverse(ctx.beta.word)))


def g_map(u: Permutation, ctx: ParityContext | None = None) -> Permutation:
    if u.n % 2 == 0:
        raise EvenSize(f"g is defined on odd sizes, got {u.n}")
    ctx = ctx or make_context((u.n - 1) // 2, Parity.ODD)
    return Permutation._trusted(_rho(_conjugated(ctx, u.word)))


def h_map(u: Permutation, ctx: ParityContext | None = None) -> Permutation:
    if u.n % 2:
        raise OddSize(f"h is defined on even sizes, got {u.n}")
    ctx = ctx or make_context(u.n // 2, Parity.EVEN)
    return Permutation._trusted(_eta(_conjugated(ctx, u.word)))


def segment_map(u: Permutation) -> Permutation:
    """g for odd sizes, h for even sizes."""
    return g_map(u) if u.n % 2 else h_map(u)


@dataclass
class Counterexample:
    u: str
    in_segment: bool
    image: str
    in_class: bool


@dataclass
class VerificationReport:
    parity: str
    m: int
    n: int
    checked: int
    segment_size: int
    class_size: int
    image_size: int
    equivalence_holds: bool
    injective: bool
    image_equals_class: bool
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.equivalence_holds and self.injective and self.image_equals_class

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


COUNTEREXAMPLE_CAP = 10


def _verify_shard(args: tuple[str, int, int]):
    parity, m, first = args
    ctx = make_context(m, parity)
    n = ctx.n
    intervals = _profile(make_wn(n).word)
    strict = ctx.parity is Parity.EVEN
    insert = _eta if strict else _rho
    a = ctx.alpha.word
    b_inv = _inverse(ctx.beta.word)
    rest = [x for x in range(1, n + 1) if x != first]

    images = []
    segment_images = []
    bad = []
    for tail in permutations(rest):
        u = (first,) + tail
        img = insert(_compose(a, _compose(_inverse(u), b_inv)))
        images.append(img)
        in_seg = _fits(intervals, u)
        in_cls = _is_dumont_word(img, strict)
        if in_seg:
            segment_images.append(img)
        if in_seg != in_cls and len(bad) < COUNTEREXAMPLE_CAP:
            bad.append((u, in_seg, img, in_cls))
    return images, segment_images, bad


def _fmt(word: Word) -> str:
    return " ".join(map(str, word))


def verify_theorem(
    parity: Parity | str,
    m: int,
    budget: int = DEFAULT_CAPS.verify_budget,
    jobs: int = 1,
) -> VerificationReport:
    """Check the segment/Dumont equivalence over the whole ambient group.

    Every u in S_n is mapped; the report records whether membership in
    [id, w_n] matches membership of the image in the Dumont class, whether
    the map is injective, and whether the segment's image is the full class.
    """
    ctx = make_context(m, parity)
    n = ctx.n
    if factorial(n) > budget:
        raise SizeTooLarge(f"{n}! exceeds the verification budget {budget}")
    start = time.perf_counter()
    shards = [(ctx.parity.value, m, first) for first in range(1, n + 1)]
    results = map_shards(_verify_shard, shards, jobs)

    all_images: set[Word] = set()
    seg_images: set[Word] = set()
    checked = 0
    seg_count = 0
    bad: list[Counterexample] = []
    for images, segment_images, shard_bad in results:
        checked += len(images)
        all_images.update(images)
        seg_count += len(segment_images)
        seg_images.update(segment_images)
        for u, s, img, c in shard_bad:
            if len(bad) < COUNTEREXAMPLE_CAP:
                bad.append(Counterexample(_fmt(u), s, _fmt(img), c))

    kind = DumontKind.SECOND if ctx.parity is Parity.EVEN else DumontKind.FIRST
    cls = {p.word for p in enumerate_dumont(kind, 2 * m + 2, cap=max(2 * m + 2, DEFAULT_CAPS.dumont))}
    return VerificationReport(
        parity=ctx.parity.value,
        m=m,
        n=n,
        checked=checked,
        segment_size=seg_count,
        class_size=len(cls),
        image_size=len(seg_images),
        equivalence_holds=not bad,
        injective=len(all_images) == checked,
        image_equals_class=seg_images == cls,
        counterexamples=bad,
        elapsed=time.perf_counter() - start,
    )
