from itertools import product

import pytest

from pdlz.errors import DomainError, ResourceLimitError
from pdlz.seqgen import (
    ab_decompose,
    count_occurrences,
    hat,
    is_primitive,
    occurrences,
    pd_doubling,
    pd_morphic,
    proper_rotations,
)

S5 = b"abaaabababaaabaaabaaabababaaabab"


@pytest.mark.parametrize("k, expected", [(0, b"a"), (1, b"ab"), (5, S5)])
def test_pd_doubling_known_values(k, expected):
    assert pd_doubling(k).seq == expected


def test_pd_morphic_hand_values():
    assert pd_morphic(0).seq == b"a"
    assert pd_morphic(2).seq == b"abaa"
    assert pd_morphic(5).seq == S5


@pytest.mark.parametrize("k", range(21))
def test_definitions_agree_and_shape(k):
    s = pd_doubling(k)
    assert s.seq == pd_morphic(k).seq
    assert s.n == 2**k
    assert s.seq[0:1] == b"a"
    assert hat(hat(s.seq)) == s.seq
    if k:
        half = pd_doubling(k - 1).seq
        assert s.seq == half + hat(half)


def test_guard():
    with pytest.raises(ResourceLimitError):
        pd_doubling(31)
    with pytest.raises(ResourceLimitError):
        pd_morphic(12, max_k=10)
    with pytest.raises(DomainError):
        pd_doubling(-1)


def test_hat():
    assert hat(b"abaa") == b"abab"
    assert hat("a") == b"b"
    assert hat(b"ab") == b"aa"
    with pytest.raises(DomainError):
        hat(b"")


@pytest.mark.parametrize("k, A, B", [(2, b"a", b"b"), (3, b"ab", b"aa")])
def test_ab_decompose_small(k, A, B):
    d = ab_decompose(k)
    assert (d.A, d.B) == (A, B)
    assert d.concat() == pd_doubling(k).seq


def test_ab_decompose_k5():
    d = ab_decompose(5)
    assert d.A == pd_doubling(3).seq and len(d.A) == 8
    assert d.B == hat(d.A)
    assert d.concat() == S5
    with pytest.raises(DomainError):
        ab_decompose(1)


def test_is_primitive():
    assert not is_primitive(b"abab")
    assert is_primitive(b"ab")
    assert is_primitive(pd_doubling(6).seq)
    assert not is_primitive(b"aaa")
    with pytest.raises(DomainError):
        is_primitive(b"")


def _primitive_by_doubling(w):
    # w is primitive iff its only occurrences in ww are the trivial ones
    return (w + w).find(w, 1) == len(w)


def test_is_primitive_matches_doubling_criterion_exhaustively():
    for n in range(1, 13):
        for t in product(b"ab", repeat=n):
            w = bytes(t)
            assert is_primitive(w) == _primitive_by_doubling(w), w


def test_count_occurrences():
    assert count_occurrences(b"a", b"aaa") == 3
    d5 = ab_decompose(5)
    assert count_occurrences(d5.A, S5) == 3
    d4 = ab_decompose(4)
    S4 = pd_doubling(4).seq
    # brute scan
    pat = d4.B + d4.A
    assert sum(S4[i : i + len(pat)] == pat for i in range(len(S4))) == 1
    assert count_occurrences(pat, S4) == 1
    assert occurrences(b"aa", b"aaaa") == [0, 1, 2]
    with pytest.raises(DomainError):
        count_occurrences(b"", b"abc")


def test_proper_rotations():
    assert proper_rotations(b"ab") == [b"ba"]
    assert proper_rotations(b"aa") == []
    assert proper_rotations(b"abaa") == [b"baaa", b"aaab", b"aaba"]
    assert proper_rotations(b"a") == []


def test_primitive_square_no_internal_occurrence():
    for n in range(1, 13):
        for t in product(b"ab", repeat=n):
            w = bytes(t)
            if is_primitive(w):
                assert count_occurrences(w, w + w) == 2


@pytest.mark.parametrize("k", range(2, 17))
def test_quarter_occurrences(k):
    d = ab_decompose(k)
    A, B, m = d.A, d.B, len(d.A)
    assert count_occurrences(A, pd_doubling(k).seq) == 3
    assert occurrences(A, A + A) == [0, m]
    assert occurrences(A, A + B) == [0]
    assert occurrences(A, B + A) == [m]


@pytest.mark.parametrize("k", range(3, 11))
def test_rotation_counts(k):
    d = ab_decompose(k)
    A, B = d.A, d.B
    rots = proper_rotations(A)
    assert len(rots) == len(A) - 1
    for alpha in rots:
        got = (count_occurrences(alpha, A * 3), count_occurrences(alpha, A + B), count_occurrences(alpha, B + A))
        assert got == (2, 1, 0)
