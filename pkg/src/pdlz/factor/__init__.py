"""LZ77, LZ-End and C-factorizations.

``engine="naive"`` runs the direct-scan reference; ``engine="indexed"`` runs the
suffix-automaton engine. Both produce identical phrases, including sources.
"""

from __future__ import annotations

from pdlz.factor import indexed, naive
from pdlz.factor.checks import decode, render_pipes, validate
from pdlz.factor.types import Factorization, Phrase, Scheme, SourceRef, SrcKind

ENGINES = ("naive", "indexed")

_TABLE = {
    ("naive", Scheme.LZ77): naive.lz77,
    ("naive", Scheme.LZEND): naive.lzend,
    ("naive", Scheme.CFACT): naive.cfact,
    ("indexed", Scheme.LZ77): indexed.lz77,
    ("indexed", Scheme.LZEND): indexed.lzend,
    ("indexed", Scheme.CFACT): indexed.cfact,
}


def as_bytes(w) -> bytes:
    if isinstance(w, str):
        return w.encode("latin-1")
    return bytes(w)


def factorize(w, scheme, engine: str = "indexed") -> Factorization:
    scheme = Scheme(scheme.upper() if isinstance(scheme, str) else scheme)
    try:
        fn = _TABLE[engine, scheme]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}") from None
    return fn(as_bytes(w))


def lz77(w, engine: str = "indexed") -> Factorization:
    return factorize(w, Scheme.LZ77, engine)


def lzend(w, engine: str = "indexed") -> Factorization:
    return factorize(w, Scheme.LZEND, engine)


def cfact(w, engine: str = "indexed") -> Factorization:
    return factorize(w, Scheme.CFACT, engine)


__all__ = [
    "ENGINES",
    "Factorization",
    "Phrase",
    "Scheme",
    "SourceRef",
    "SrcKind",
    "as_bytes",
    "cfact",
    "decode",
    "factorize",
    "lz77",
    "lzend",
    "render_pipes",
    "validate",
]
