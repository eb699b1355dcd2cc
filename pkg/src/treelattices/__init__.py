"""Finite lattices of trees, the projections between them, and tree coalgebras."""

from .orders import FAMILIES, build
from .posets import FinitePoset, PosetMap, are_isomorphic, verify_interval_retract
from .trees import (
    LEAF,
    BiLeveledTree,
    Composition,
    PaintedTree,
    Permutation,
    Subset,
    WeightedTree,
    encode,
    parse,
)

__version__ = "0.1.0"

__all__ = [
    "FAMILIES", "build", "FinitePoset", "PosetMap", "are_isomorphic", "verify_interval_retract",
    "LEAF", "BiLeveledTree", "Composition", "PaintedTree", "Permutation", "Subset", "WeightedTree",
    "encode", "parse",
]
