"""Exact construction, verification, counting and bounds for q-ary non-overlapping codes."""

from .words import Bipartition, Code, Word
from .verify import find_overlap, is_non_expandable, is_non_overlapping
from .construct import (
    ForbiddenSet,
    construction_I,
    construction_IA,
    construction_I_prime,
    construction_II,
    construction_II_prime,
    phi_code,
    phi_expand,
)
from .count import CodeSizeProfile, s_count, vcal_count
from .bounds import BoundValue, chee_bound, levenshtein_bound, recursive_bound, recursive_bound_min

__all__ = [
    "Bipartition", "Code", "Word",
    "find_overlap", "is_non_expandable", "is_non_overlapping",
    "ForbiddenSet", "construction_I", "construction_IA", "construction_I_prime",
    "construction_II", "construction_II_prime", "phi_code", "phi_expand",
    "CodeSizeProfile", "s_count", "vcal_count",
    "BoundValue", "chee_bound", "levenshtein_bound", "recursive_bound", "recursive_bound_min",
]
