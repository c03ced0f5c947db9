from itertools import product

import pytest
from hypothesis import given

from conftest import perms
from footrule import (
    EmptyInput,
    NotAPermutation,
    Permutation,
    SizeMismatch,
    compose,
    format_perm,
    inverse,
    make_wn,
    parse,
)
from footrule.perm import all_permutations, cycles


@pytest.mark.parametrize(
    ("text", "word"),
    [
        ("2 3 1", (2, 3, 1)),
        ("3412", (3, 4, 1, 2)),
        ("1,3,2", (1, 3, 2)),
        ("  (2 1) ", (2, 1)),
        ("10 1 2 3 4 5 6 7 8 9", (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)),
        ("1", (1,)),
    ],
)
def test_parse(text, word):
    assert parse(text).word == word


@pytest.mark.parametrize("text", ["2 2 1", "1 3", "0 1", "21 3", "a b"])
def test_parse_rejects_non_permutations(text):
    with pytest.raises(NotAPermutation):
        parse(text)


@pytest.mark.parametrize("text", ["", "   ", "()"])
def test_parse_empty(text):
    with pytest.raises(EmptyInput):
        parse(text)


def test_compose_convention(p):
    # (p q)(i) = p(q(i)): the right factor acts first
    assert compose(p("231"), p("213")).word == (3, 2, 1)
    assert compose(p("213"), p("231")).word == (1, 3, 2)


def test_compose_identity(p):
    q = p("3142")
    assert compose(Permutation.identity(4), q) == q
    assert compose(q, Permutation.identity(4)) == q


def test_compose_anchor_odd(p):
    # alpha u^-1 beta^-1 at m = 1, u = id
    assert compose(p("132"), compose(inverse(p("123")), inverse(p("231")))) == p("213")


def test_compose_anchor_even(p):
    assert compose(p("1324"), inverse(p("3142"))) == p("3412")


def test_compose_size_mismatch(p):
    with pytest.raises(SizeMismatch):
        compose(p("12"), p("123"))


@pytest.mark.parametrize(("u", "expected"), [("123", "123"), ("231", "312"), ("3412", "3412")])
def test_inverse(p, u, expected):
    assert inverse(p(u)) == p(expected)


@pytest.mark.parametrize(("n", "expected"), [(1, "1"), (2, "21"), (3, "231"), (4, "3412"), (5, "34512")])
def test_make_wn(p, n, expected):
    assert make_wn(n) == p(expected)


def test_make_wn_ten():
    assert make_wn(10).word == (6, 7, 8, 9, 10, 1, 2, 3, 4, 5)


@pytest.mark.parametrize("n", range(1, 5))
def test_group_laws_exhaustive(n):
    group = list(all_permutations(n))
    ident = Permutation.identity(n)
    for a in group:
        assert compose(a, inverse(a)) == ident == compose(inverse(a), a)
        assert inverse(inverse(a)) == a
    for a, b, c in product(group, repeat=3):
        assert compose(a, compose(b, c)) == compose(compose(a, b), c)


@given(perms(), perms())
def test_associativity_random(a, b):
    if a.n != b.n:
        return
    c = inverse(b)
    assert compose(a, compose(b, c)) == compose(compose(a, b), c) == a


@given(perms(max_n=30))
def test_roundtrip(u):
    assert parse(format_perm(u)) == u
    if u.n <= 9:
        assert parse(format_perm(u, compact=True)) == u


def test_wn_cycle_structure():
    for n in range(2, 15):
        w = make_wn(n)
        assert all(w(i) != i for i in range(1, n + 1))
        if n % 2 == 0:
            # even block swap is a product of n/2 disjoint transpositions
            assert sorted(len(c) for c in cycles(w)) == [2] * (n // 2)
    assert make_wn(1).is_identity()
    assert cycles(make_wn(4)) == [(1, 3), (2, 4)]


def test_permutation_is_hashable_and_ordered(p):
    assert sorted([p("312"), p("123"), p("213")]) == [p("123"), p("213"), p("312")]
    assert len({p("12"), Permutation([1, 2])}) == 1
    assert str(p("3412")) == "3 4 1 2"
