"""Checks for the combinatorial facts about S_k the LZ-End analysis relies on."""

from __future__ import annotations

from itertools import product
from typing import Callable

from pdlz.config import DEFAULT_LIMITS, Limits
from pdlz.errors import DomainError, ResourceLimitError
from pdlz.report import VerificationReport
from pdlz.seqgen import count_occurrences, hat, is_primitive, occurrences, pd_doubling, pd_morphic, proper_rotations


def _default_sequence(k: int) -> bytes:
    return pd_doubling(k).seq


def verify_lemmas(
    k_min: int,
    k_max: int,
    *,
    sequence: Callable[[int], bytes] | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> VerificationReport:
    """Run every word-level claim about S_k for k in [k_min, k_max].

    ``sequence`` replaces the generator (k -> bytes); tests use it to inject
    corrupted sequences. Rotation counts only run for 3 <= k <= limits.rotation_max_k.
    """
    if not 0 <= k_min <= k_max:
        raise DomainError(f"need 0 <= k_min <= k_max, got [{k_min}, {k_max}]")
    if k_max > limits.max_k:
        raise ResourceLimitError(f"k_max={k_max} exceeds max_k={limits.max_k}")
    seq = sequence or _default_sequence
    rep = VerificationReport(title=f"lemmas k={k_min}..{k_max}")
    rep.meta.update(k_min=k_min, k_max=k_max, rotation_max_k=limits.rotation_max_k)

    for k in range(k_min, k_max + 1):
        S = seq(k)
        rep.add("length", k, 2**k, len(S))
        rep.add("definitions_agree", k, True, pd_morphic(k).seq == S)
        rep.add("primitive", k, True, is_primitive(S), payload={"S": S[:256]})
        rep.add("hat_involution", k, True, hat(hat(S)) == S)
        if k < 2:
            continue
        A = seq(k - 2)
        B = hat(A)
        m = len(A)
        rep.add("abaa_tiling", k, True, A + B + A + A == S)
        rep.add("count_A_in_S", k, 3, count_occurrences(A, S))
        rep.add("A_in_AA", k, [0, m], occurrences(A, A + A))
        rep.add("A_in_AB", k, [0], occurrences(A, A + B))
        rep.add("A_in_BA", k, [m], occurrences(A, B + A))
        if k >= 3:
            A1 = seq(k - 3)
            B1 = hat(A1)
            rep.add("A_recursion", k, True, A == A1 + B1 and B == A1 + A1)
        if 3 <= k <= limits.rotation_max_k:
            AAA, AB, BA = A + A + A, A + B, B + A
            bad = []
            rots = proper_rotations(A)
            for alpha in rots:
                got = (count_occurrences(alpha, AAA), count_occurrences(alpha, AB), count_occurrences(alpha, BA))
                if got != (2, 1, 0):
                    bad.append((alpha, got))
            rep.add("rotation_count", k, len(A) - 1, len(rots))
            rep.add(
                "rotation_occurrences",
                k,
                0,
                len(bad),
                payload={"rotation": bad[0][0], "counts": list(bad[0][1])} if bad else None,
            )
    return rep


def verify_primitive_square(max_len: int) -> VerificationReport:
    """For every primitive binary w with |w| <= max_len, w occurs exactly twice in ww."""
    rep = VerificationReport(title=f"primitive squares |w| <= {max_len}")
    for n in range(1, max_len + 1):
        tested = bad = 0
        first = None
        for t in product(b"ab", repeat=n):
            w = bytes(t)
            if not is_primitive(w):
                continue
            tested += 1
            if count_occurrences(w, w + w) != 2:
                bad += 1
                first = first or w
        rep.add("primitive_square", n, 0, bad, payload={"w": first} if first else None)
        rep.meta[f"primitive_words_len_{n}"] = tested
    return rep
