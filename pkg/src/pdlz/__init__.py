"""Lempel-Ziv factorizations of period-doubling sequences.

LZ77, LZ-End and C-factorizations with naive and indexed engines, period-doubling
generators, closed-form phrase-count predictions, and verification harnesses.
"""

from pdlz.config import Limits, DEFAULT_LIMITS
from pdlz.errors import DomainError, ResourceLimitError, StructuralError
from pdlz.seqgen import PDSequence, pd_doubling, pd_morphic, hat
from pdlz.factor import Factorization, Phrase, SourceRef, lz77, lzend, cfact

__all__ = [
    "Limits",
    "DEFAULT_LIMITS",
    "DomainError",
    "ResourceLimitError",
    "StructuralError",
    "PDSequence",
    "pd_doubling",
    "pd_morphic",
    "hat",
    "Factorization",
    "Phrase",
    "SourceRef",
    "lz77",
    "lzend",
    "cfact",
]

__version__ = "0.1.0"
