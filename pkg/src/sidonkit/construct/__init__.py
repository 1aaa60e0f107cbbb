"""Constructions: conjugation recipes, permanent and Hamilton lifts, deletion sampling, hash families."""

from .hamilton import hamilton_lift, lift_with_orientation, random_orientation, respected_cycles
from .hashing import hash_code_bound, hash_shift_family
from .permanent import (
    SquareMatrix01,
    cayley_matrix,
    ef_bound,
    naive_permanent,
    permanent_lift,
    ryser_permanent,
)
from .probabilistic import (
    HypergraphProfile,
    ProbabilisticResult,
    anticommuting_base,
    check_base,
    probabilistic_sidon,
)
from .recipes import PairSet, canonical_pi, class_recipe, conjugacy_recipe, sn_cross

__all__ = [
    "hamilton_lift", "lift_with_orientation", "random_orientation", "respected_cycles",
    "hash_code_bound", "hash_shift_family",
    "SquareMatrix01", "cayley_matrix", "ef_bound", "naive_permanent", "permanent_lift", "ryser_permanent",
    "HypergraphProfile", "ProbabilisticResult", "anticommuting_base", "check_base", "probabilistic_sidon",
    "PairSet", "canonical_pi", "class_recipe", "conjugacy_recipe", "sn_cross",
]
