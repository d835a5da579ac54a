"""Verification harnesses, brute-force oracles and the exhaustive ratio search."""

from pdlz.lab.crosscheck import cross_check_engines, random_corpus
from pdlz.lab.lemmas import verify_lemmas, verify_primitive_square
from pdlz.lab.search import RatioSearchResult, enumerate_binary, max_ratio_search
from pdlz.lab.structure import ratio_table, split_wxy, verify_structure

__all__ = [
    "RatioSearchResult",
    "cross_check_engines",
    "enumerate_binary",
    "max_ratio_search",
    "random_corpus",
    "ratio_table",
    "split_wxy",
    "verify_lemmas",
    "verify_primitive_square",
    "verify_structure",
]
