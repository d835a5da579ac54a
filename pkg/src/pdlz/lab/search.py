"""Exhaustive z'/z search over binary strings.

Strings are enumerated up to renaming of the two letters: every representative
starts with ``a``. Work is split into blocks keyed by (length, prefix); blocks
are independent and merged order-insensitively, so results do not depend on
the number of workers.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator

from pdlz.config import DEFAULT_LIMITS, Limits, default_workers
from pdlz.errors import ResourceLimitError
from pdlz.factor import lz77, lzend

BLOCK_BITS = 10


def _guard(max_len: int, limits: Limits) -> None:
    if not 1 <= max_len <= limits.max_enum_len:
        raise ResourceLimitError(f"max_len must be in [1, {limits.max_enum_len}], got {max_len}")


def enumerate_binary(max_len: int, limits: Limits = DEFAULT_LIMITS) -> Iterator[bytes]:
    """Every binary string of length 1..max_len starting with 'a', length-then-lexicographic."""
    _guard(max_len, limits)
    for n in range(1, max_len + 1):
        for tail in product(b"ab", repeat=n - 1):
            yield b"a" + bytes(tail)


def _blocks(max_len: int) -> list[tuple[int, bytes]]:
    out = []
    for n in range(1, max_len + 1):
        p = min(n, BLOCK_BITS)
        for tail in product(b"ab", repeat=p - 1):
            out.append((n, b"a" + bytes(tail)))
    return out


def _block_strings(n: int, prefix: bytes) -> Iterator[bytes]:
    for tail in product(b"ab", repeat=n - len(prefix)):
        yield prefix + bytes(tail)


@dataclass
class _Partial:
    best: Fraction = Fraction(0)
    witnesses: list = field(default_factory=list)
    histogram: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    count: int = 0

    def merge(self, other: "_Partial") -> None:
        if other.best > self.best:
            self.best, self.witnesses = other.best, list(other.witnesses)
        elif other.best == self.best:
            self.witnesses.extend(other.witnesses)
        self.histogram.update(other.histogram)
        self.violations.extend(other.violations)
        self.count += other.count


def _run_block(args) -> _Partial:
    n, prefix, engine = args
    part = _Partial()
    for s in _block_strings(n, prefix):
        z = lz77(s, engine).count
        zp = lzend(s, engine).count
        part.count += 1
        part.histogram[z, zp] += 1
        if zp < z:
            part.violations.append((s, z, zp))
        r = Fraction(zp, z)
        if r > part.best:
            part.best, part.witnesses = r, [(s, z, zp)]
        elif r == part.best:
            part.witnesses.append((s, z, zp))
    return part


@dataclass(frozen=True)
class RatioSearchResult:
    max_len: int
    engine: str
    n_strings: int
    best_ratio: Fraction
    witnesses: tuple[dict, ...]
    histogram: dict
    dominance_violations: tuple[dict, ...]

    @property
    def conjecture_holds(self) -> bool:
        return self.best_ratio <= 2 and not self.dominance_violations

    def to_dict(self, max_witnesses: int | None = None) -> dict:
        wit = self.witnesses if max_witnesses is None else self.witnesses[:max_witnesses]
        return {
            "max_len": self.max_len,
            "engine": self.engine,
            "n_strings": self.n_strings,
            "best_ratio": f"{self.best_ratio.numerator}/{self.best_ratio.denominator}",
            "best_ratio_float": float(self.best_ratio),
            "n_witnesses": len(self.witnesses),
            "witnesses": list(wit),
            "histogram": [
                {"z": z, "z_prime": zp, "count": c} for (z, zp), c in sorted(self.histogram.items())
            ],
            "dominance_violations": list(self.dominance_violations),
            "conjecture_holds": self.conjecture_holds,
        }


def max_ratio_search(
    max_len: int,
    engine: str = "naive",
    workers: int | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> RatioSearchResult:
    """Largest z'/z over all binary strings of length <= max_len (via representatives)."""
    _guard(max_len, limits)
    workers = default_workers() if workers is None else max(1, workers)
    jobs = [(n, prefix, engine) for n, prefix in _blocks(max_len)]
    total = _Partial()
    if workers == 1:
        parts = map(_run_block, jobs)
        for part in parts:
            total.merge(part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_run_block, jobs, chunksize=8):
                total.merge(part)

    def key(t):
        return (len(t[0]), t[0])

    witnesses = tuple(
        {"string": s.decode(), "z": z, "z_prime": zp} for s, z, zp in sorted(total.witnesses, key=key)
    )
    violations = tuple(
        {"string": s.decode(), "z": z, "z_prime": zp} for s, z, zp in sorted(total.violations, key=key)
    )
    return RatioSearchResult(
        max_len=max_len,
        engine=engine,
        n_strings=total.count,
        best_ratio=total.best,
        witnesses=witnesses,
        histogram=dict(sorted(total.histogram.items())),
        dominance_violations=violations,
    )
