"""Reference engines: direct scans that transcribe the greedy definitions.

Each step is a plain ``bytes.find`` / ``bytes.endswith`` over the parsed prefix.
Slow (roughly cubic in the worst case) but independent of any index.
"""

from __future__ import annotations

from pdlz.config import DEFAULT_LIMITS
from pdlz.errors import ResourceLimitError
from pdlz.factor.types import Factorization, Phrase, Scheme, SourceRef


def _guard(w: bytes, limit: int | None) -> None:
    limit = DEFAULT_LIMITS.naive_max_len if limit is None else limit
    if len(w) > limit:
        raise ResourceLimitError(f"naive engine limited to {limit} bytes, got {len(w)}")


def longest_previous(w: bytes, i: int) -> tuple[int, int]:
    """Longest L with w[i:i+L] occurring inside w[:i]; returns (L, leftmost start or -1)."""
    n = len(w)
    L, pos = 0, -1
    while i + L < n:
        p = w.find(w[i : i + L + 1], 0, i)
        if p < 0:
            break
        L += 1
        pos = p
    return L, pos


def longest_boundary_suffix(w: bytes, i: int, ends: list[int], cap: int | None = None) -> tuple[int, int]:
    """Longest L such that w[i:i+L] is a suffix of w[:ends[j]]; returns (L, smallest such j or -1).

    ``cap`` bounds the lengths tried; any valid L is at most the longest previous
    occurrence at ``i`` because every boundary lies at or before ``i``.
    """
    if cap is None:
        cap = longest_previous(w, i)[0]
    best, best_j = 0, -1
    for j, e in enumerate(ends):
        for L in range(min(cap, e), best, -1):
            if w.endswith(w[i : i + L], 0, e):
                best, best_j = L, j
                break
    return best, best_j


def lz77(w: bytes, limit: int | None = None) -> Factorization:
    _guard(w, limit)
    n = len(w)
    phrases = []
    i = 0
    while i < n:
        L, pos = longest_previous(w, i)
        if i + L == n:
            p = Phrase(i, L, SourceRef.window(pos), False)
        elif L == 0:
            p = Phrase(i, 1, SourceRef.none(), True)
        else:
            p = Phrase(i, L + 1, SourceRef.window(pos), True)
        phrases.append(p)
        i = p.end
    return Factorization(Scheme.LZ77, phrases, n, engine="naive")


def lzend(w: bytes, limit: int | None = None) -> Factorization:
    _guard(w, limit)
    n = len(w)
    phrases = []
    ends: list[int] = []
    i = 0
    while i < n:
        L, j = longest_boundary_suffix(w, i, ends)
        src = SourceRef.boundary(j) if L else SourceRef.none()
        if i + L == n:
            p = Phrase(i, L, src, False)
        else:
            p = Phrase(i, L + 1, src, True)
        phrases.append(p)
        ends.append(p.end)
        i = p.end
    return Factorization(Scheme.LZEND, phrases, n, engine="naive")


def cfact(w: bytes, limit: int | None = None) -> Factorization:
    _guard(w, limit)
    n = len(w)
    phrases = []
    i = 0
    while i < n:
        L, pos = longest_previous(w, i)
        if L == 0:
            p = Phrase(i, 1, SourceRef.none(), True)
        else:
            p = Phrase(i, L, SourceRef.window(pos), False)
        phrases.append(p)
        i = p.end
    return Factorization(Scheme.CFACT, phrases, n, engine="naive")
