"""Exact computations in the unbranched George groups: finite types A and B,
affine types A and C, all in window notation."""

from .errors import *  # noqa: F401,F403
from .groups import (
    Element,
    Family,
    GroupSpec,
    apply,
    from_window,
    identity,
    inverse,
    is_frozen,
    multiply,
    simple_reflection,
    symmetry_class,
)
from .patterns import avoids_P, classical_contains, contains_global_321, displacement_bound
from .statistics import crossing_numbers, disarray, gap, is_tight
from .words import (
    condition_B,
    condition_Bprime,
    coxeter_length,
    is_fully_commutative,
    is_reduced,
    reduced_words,
    right_descents,
    word_to_element,
)

__version__ = "0.1.0"
