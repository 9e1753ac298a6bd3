"""Multi-Catalan tableaux, the two-species PASEP and exact stationary checks."""

from .chain import ChainParams, DEFAULT_GRID, build_sector_chain, stationary, verify_stationary_theorem
from .core import Word, all_words, de_decompose, parse_word, shape_of
from .counting import count_nkr, det_poly, z0_count
from .exact import WeightPoly, parse_rational
from .qone import RuleSet, enumerate_alt, verify_conjecture
from .tableaux import enumerate_condensed, enumerate_staircase, word_weight

__all__ = [
    "ChainParams", "DEFAULT_GRID", "RuleSet", "WeightPoly", "Word",
    "all_words", "build_sector_chain", "count_nkr", "de_decompose", "det_poly",
    "enumerate_alt", "enumerate_condensed", "enumerate_staircase", "parse_rational",
    "parse_word", "shape_of", "stationary", "verify_conjecture",
    "verify_stationary_theorem", "word_weight", "z0_count",
]
