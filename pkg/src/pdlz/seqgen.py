"""Period-doubling sequences and the word primitives their lemmas are stated in.

Positions are 0-based throughout. Strings are ``bytes`` over ``b"ab"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from pdlz.config import DEFAULT_LIMITS
from pdlz.errors import DomainError, ResourceLimitError

ALPHABET = b"ab"
_SWAP = bytes.maketrans(b"ab", b"ba")


def as_binary(w) -> bytes:
    """Coerce ``w`` (``str``/``bytes``) to bytes and check it is over ``{a, b}``."""
    if isinstance(w, str):
        w = w.encode("ascii")
    w = bytes(w)
    if w.translate(None, ALPHABET):
        raise DomainError(f"not a binary string over 'ab': {w[:40]!r}")
    return w


@dataclass(frozen=True)
class PDSequence:
    k: int
    seq: bytes

    @property
    def n(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return self.seq.decode("ascii")


@dataclass(frozen=True)
class ABDecomposition:
    k: int
    A: bytes
    B: bytes

    def concat(self) -> bytes:
        return self.A + self.B + self.A + self.A


def _check_k(k: int, max_k: int | None) -> None:
    max_k = DEFAULT_LIMITS.max_k if max_k is None else max_k
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    if k > max_k:
        raise ResourceLimitError(f"k={k} exceeds max_k={max_k} (S_k has 2**k bytes)")


def pd_doubling(k: int, max_k: int | None = None) -> PDSequence:
    """S_0 = a, S_k = S_{k-1} followed by S_{k-1} with its last letter flipped."""
    _check_k(k, max_k)
    buf = bytearray(b"a")
    for _ in range(k):
        buf.extend(bytes(buf))
        buf[-1] ^= ord("a") ^ ord("b")
    return PDSequence(k, bytes(buf))


def pd_morphic(k: int, max_k: int | None = None) -> PDSequence:
    """k-fold image of ``a`` under a -> ab, b -> aa."""
    _check_k(k, max_k)
    s = b"a"
    for _ in range(k):
        # every letter c maps to 'a' followed by the complement of c
        out = bytearray(2 * len(s))
        out[0::2] = b"a" * len(s)
        out[1::2] = s.translate(_SWAP)
        s = bytes(out)
    return PDSequence(k, s)


def complement(w) -> bytes:
    return as_binary(w).translate(_SWAP)


def hat(w) -> bytes:
    """``w`` with its final letter complemented."""
    w = as_binary(w)
    if not w:
        raise DomainError("hat is undefined on the empty string")
    return w[:-1] + w[-1:].translate(_SWAP)


def ab_decompose(k: int, max_k: int | None = None) -> ABDecomposition:
    """Split S_k as A B A A with A = S_{k-2} and B = hat(A)."""
    if not isinstance(k, int) or k < 2:
        raise DomainError(f"ABAA decomposition needs k >= 2, got {k!r}")
    A = pd_doubling(k - 2, max_k).seq
    d = ABDecomposition(k, A, hat(A))
    if d.concat() != pd_doubling(k, max_k).seq:  # pragma: no cover - would be a generator bug
        raise AssertionError(f"A B A A != S_{k}")
    return d


def is_primitive(w) -> bool:
    """True unless ``w`` equals x**m for a proper prefix x (m >= 2)."""
    w = bytes(w.encode() if isinstance(w, str) else w)
    n = len(w)
    if n == 0:
        raise DomainError("primitivity is undefined on the empty string")
    for d in range(1, n // 2 + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return False
    return True


def occurrences(pattern, text) -> list[int]:
    """Start positions of every (possibly overlapping) occurrence."""
    pattern = bytes(pattern.encode() if isinstance(pattern, str) else pattern)
    text = bytes(text.encode() if isinstance(text, str) else text)
    if not pattern:
        raise DomainError("empty pattern")
    out = []
    pos = text.find(pattern)
    while pos != -1:
        out.append(pos)
        pos = text.find(pattern, pos + 1)
    return out


def count_occurrences(pattern, text) -> int:
    return len(occurrences(pattern, text))


def proper_rotations(w) -> list[bytes]:
    """Rotations w[i:] + w[:i] (1 <= i < |w|) that differ from ``w``, in order of i."""
    w = bytes(w.encode() if isinstance(w, str) else w)
    if not w:
        raise DomainError("rotations of the empty string")
    out = []
    for i in range(1, len(w)):
        r = w[i:] + w[:i]
        if r != w:
            out.append(r)
    return out
