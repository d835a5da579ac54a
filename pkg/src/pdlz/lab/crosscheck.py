"""Naive-vs-indexed engine equivalence on exhaustive and seeded random corpora."""

from __future__ import annotations

import random
from itertools import product
from typing import Callable, Iterable, Mapping

from pdlz.config import DEFAULT_LIMITS, Limits
from pdlz.errors import ResourceLimitError
from pdlz.factor import Factorization, Scheme, indexed, naive
from pdlz.report import VerificationReport

Engine = Mapping[Scheme, Callable[[bytes], Factorization]]

NAIVE: Engine = {Scheme.LZ77: naive.lz77, Scheme.LZEND: naive.lzend, Scheme.CFACT: naive.cfact}
INDEXED: Engine = {Scheme.LZ77: indexed.lz77, Scheme.LZEND: indexed.lzend, Scheme.CFACT: indexed.cfact}


def all_binary(max_len: int) -> Iterable[bytes]:
    """Every string over {a, b} of length 1..max_len (both first letters)."""
    for n in range(1, max_len + 1):
        for t in product(b"ab", repeat=n):
            yield bytes(t)


def random_corpus(trials: int, max_len: int, seed: int) -> list[bytes]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        sigma = rng.randint(2, 4)
        n = rng.randint(1, max_len)
        out.append(bytes(rng.choices(b"abcd"[:sigma], k=n)))
    return out


def _key(f: Factorization):
    return [(p.start, p.length, p.src.kind.value, p.src.value, p.has_sentinel) for p in f.phrases]


def _compare(rep, corpus_name, corpus, reference, candidate) -> None:
    for scheme in (Scheme.LZ77, Scheme.LZEND, Scheme.CFACT):
        mismatches = 0
        tested = 0
        payload = None
        for s in corpus:
            tested += 1
            a, b = reference[scheme](s), candidate[scheme](s)
            if _key(a) != _key(b):
                mismatches += 1
                if payload is None:
                    payload = {"input": s, "reference": a.to_dict(), "candidate": b.to_dict()}
        rep.add(f"{corpus_name}:{scheme.value}", tested, 0, mismatches, payload=payload)


def cross_check_engines(
    max_len: int,
    random_trials: int,
    max_random_len: int,
    seed: int = 0,
    *,
    reference: Engine = NAIVE,
    candidate: Engine = INDEXED,
    limits: Limits = DEFAULT_LIMITS,
) -> VerificationReport:
    """Phrase-for-phrase comparison (sources included) of two engines.

    The exhaustive corpus holds every binary string of length <= max_len; the
    random corpus holds ``random_trials`` strings of length 1..max_random_len
    over 2-4 letters, drawn from ``random.Random(seed)``.
    """
    if max_len > limits.max_enum_len:
        raise ResourceLimitError(f"max_len={max_len} exceeds {limits.max_enum_len}")
    if max_random_len > limits.naive_max_len:
        raise ResourceLimitError(f"max_random_len={max_random_len} exceeds {limits.naive_max_len}")
    rep = VerificationReport(title="engine cross-check")
    rep.meta.update(max_len=max_len, random_trials=random_trials, max_random_len=max_random_len, seed=seed)
    if max_len > 0:
        _compare(rep, "exhaustive", list(all_binary(max_len)), reference, candidate)
    if random_trials > 0:
        _compare(rep, "random", random_corpus(random_trials, max_random_len, seed), reference, candidate)
    return rep
