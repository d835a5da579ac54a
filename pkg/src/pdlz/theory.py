"""Closed forms for the LZ77 / LZ-End factorizations of period-doubling sequences.

All values are exact: Python integers and :class:`fractions.Fraction`.

Terminology used below (k >= 5):

* ``lzeph(k)`` -- number of LZ-End phrases of S_k.
* ``w_k, x_k`` -- the LZ-End phrases of S_k at 1-based indices ``lzeph(k-1)`` and
  ``lzeph(k-1) + 1``; ``y_k`` is whatever follows ``x_k`` (possibly empty).
* realignment indices ``k*_1 < k*_2 < ...`` -- the k where ``w_k`` equals the
  last LZ-End phrase of S_{k-1}. ``k*_1 = 5`` and
  ``k*_m = k*_{m-1} + 3 * 2**k*_{m-1} / 16``.
* ``ell(k)`` -- the largest realignment index not exceeding k.
* ``f(k) = m + 1`` for ``k*_m - 1 <= k <= k*_{m+1} - 2``; then ``lzeph(k) = 2k - f(k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from pdlz.errors import DomainError

KSTAR_1 = 5
# LZ-End of S_4 is a|b|aa|aba|bab|aaabaa; its last phrase seeds the covering identity
LAST_PHRASE_LEN_S4 = 6


def _next_kstar(k: int) -> int:
    return k + 3 * 2 ** (k - 4)


def _kstars_upto(bound: int) -> list[int]:
    """Every realignment index <= bound.

    The successor of k is k + 3 * 2**(k-4); it is only materialized when it can
    still be <= bound, so huge bounds never build astronomically large integers.
    """
    out = []
    k = KSTAR_1
    while k <= bound:
        out.append(k)
        if k - 4 > bound.bit_length() + 2:
            break
        k = _next_kstar(k)
    return out


@dataclass(frozen=True)
class KStarTable:
    horizon: int
    entries: tuple[int, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def kstar_table(horizon_k: int) -> KStarTable:
    """Realignment indices up to ``horizon_k``: horizon 400 gives (5, 11, 395)."""
    if horizon_k < KSTAR_1:
        raise DomainError(f"horizon must be >= {KSTAR_1}, got {horizon_k}")
    return KStarTable(horizon_k, tuple(_kstars_upto(horizon_k)))


def f_of_k(k: int) -> int:
    """Correction term f(k) in lzeph(S_k) = 2k - f(k); defined for k >= 4."""
    if k < KSTAR_1 - 1:
        raise DomainError(f"f(k) is defined for k >= {KSTAR_1 - 1}, got {k}")
    # k lies in [k*_m - 1, k*_{m+1} - 2] exactly when m = #{k* <= k + 1}
    return len(_kstars_upto(k + 1)) + 1


def ell(k: int) -> int:
    """Largest realignment index <= k."""
    if k < KSTAR_1:
        raise DomainError(f"ell(k) is defined for k >= {KSTAR_1}, got {k}")
    return _kstars_upto(k)[-1]


def in_K(k: int) -> bool:
    return k >= KSTAR_1 and ell(k) == k


def lzph(k: int) -> int:
    """LZ77 phrase count of S_k: the phrases are S_0 and hat(S_0), ..., hat(S_{k-1})."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    return k + 1


def lzeph(k: int) -> int:
    return 2 * k - f_of_k(k)


@dataclass(frozen=True)
class TheoryPrediction:
    k: int
    f: int
    lzph: int
    lzeph: int
    in_K: bool
    ell: int
    w_len: int
    x_len: int
    y_len: int

    @property
    def n(self) -> int:
        return 2**self.k

    @property
    def last_len(self) -> int:
        """Length of the last LZ-End phrase of S_k (y_k if nonempty, else x_k)."""
        return self.y_len if self.y_len else self.x_len


def predicted_counts(k: int) -> TheoryPrediction:
    if k < KSTAR_1:
        raise DomainError(f"the LZ-End structure formulas need k >= {KSTAR_1}, got {k}")
    n = 2**k
    lk = ell(k)
    if lk == k:
        w, x, y = 3 * n // 16, 5 * n // 16 + 1, 3 * n // 16 - 1
    else:
        w, x, y = n // 8 + 1, 3 * n // 8, 3 * 2**lk // 16 - (k - lk) - 1
    f = f_of_k(k)
    return TheoryPrediction(k, f, k + 1, 2 * k - f, lk == k, lk, w, x, y)


def covered_by_shared_phrases(k: int) -> int:
    """Length of the prefix of S_k covered by the phrases it shares with S_{k-1}.

    ``w_k`` starts where the last LZ-End phrase of S_{k-1} starts, so the shared
    phrases cover ``n_{k-1} - |last phrase of S_{k-1}|`` characters.
    """
    if k < KSTAR_1:
        raise DomainError(f"need k >= {KSTAR_1}, got {k}")
    prev_last = LAST_PHRASE_LEN_S4 if k == KSTAR_1 else predicted_counts(k - 1).last_len
    return 2 ** (k - 1) - prev_last


def ratio(k: int) -> Fraction:
    """z'/z = (2k - f(k)) / (k + 1) for S_k."""
    if k < KSTAR_1:
        raise DomainError(f"ratio is tabulated for k >= {KSTAR_1}, got {k}")
    return Fraction(lzeph(k), lzph(k))


def ratio_gap(k: int) -> Fraction:
    """2 - ratio(k), which equals (f(k) + 2) / (k + 1)."""
    return 2 - ratio(k)


# --- straight-line program ------------------------------------------------


@dataclass(frozen=True)
class SLP:
    """A grammar in Chomsky normal form producing S_k.

    ``productions`` maps a nonterminal to either a terminal byte string of length
    one or a pair of nonterminals. ``size`` counts productions.
    """

    k: int
    start: str
    productions: tuple[tuple[str, tuple[str, str] | bytes], ...]

    @property
    def size(self) -> int:
        return len(self.productions)

    def rules(self) -> dict:
        return dict(self.productions)

    def expand(self, symbol: str | None = None) -> bytes:
        rules = self.rules()
        memo: dict[str, bytes] = {}
        # productions are listed top-down, so expand bottom-up
        for lhs, rhs in reversed(self.productions):
            memo[lhs] = rhs if isinstance(rhs, bytes) else memo[rhs[0]] + memo[rhs[1]]
        if set(memo) != set(rules):  # pragma: no cover
            raise AssertionError("undefined nonterminal")
        return memo[symbol or self.start]

    def __str__(self) -> str:
        parts = []
        for lhs, rhs in self.productions:
            body = rhs.decode() if isinstance(rhs, bytes) else " ".join(rhs)
            parts.append(f"{lhs} -> {body}")
        return "\n".join(parts)


def pd_slp(k: int) -> SLP:
    """S_i -> S_{i-1} T_i and T_i -> S_{i-2} S_{i-2} for i = k..2, then S_1 -> S_0 X_b, X_b -> b, S_0 -> a.

    That is 2(k-1) + 3 = 2k + 1 productions. S_1 = ab is split into the two
    Chomsky-normal-form rules S_1 -> S_0 X_b and X_b -> b.
    """
    if k < 2:
        raise DomainError(f"the grammar needs k >= 2, got {k}")
    prods: list[tuple[str, tuple[str, str] | bytes]] = []
    for i in range(k, 1, -1):
        prods.append((f"S{i}", (f"S{i - 1}", f"T{i}")))
        prods.append((f"T{i}", (f"S{i - 2}", f"S{i - 2}")))
    prods.append(("S1", ("S0", "Xb")))
    prods.append(("Xb", b"b"))
    prods.append(("S0", b"a"))
    return SLP(k, f"S{k}", tuple(prods))
