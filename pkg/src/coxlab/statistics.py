"""Disarray, crossing numbers, and the gap between length and disarray/2."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FrozenPosition
from .groups import Element
from .patterns import displacement_bound
from .words import coxeter_length

__all__ = ["Crossing", "disarray", "crossing_numbers", "gap", "is_tight"]


def disarray(w: Element) -> int:
    """Total displacement over the window, ``sum |w(i) - i|``."""
    total = sum(abs(v - i) for i, v in enumerate(w.window, start=1))
    assert total % 2 == 0, f"odd disarray {total} for {w}"
    return total


@dataclass(frozen=True)
class Crossing:
    """How many values cross the cut between ``position`` and the next unfrozen integer.

    ``a`` counts j <= position with w(j) > position, ``b`` counts j > position
    with w(j) <= position.
    """

    position: int
    a: int
    b: int


def crossing_numbers(w: Element, i: int) -> Crossing:
    spec = w.spec
    if spec.is_frozen(i):
        raise FrozenPosition(f"{i} is frozen in {spec}")
    d = displacement_bound(w)
    # |w(j) - j| <= d, so positions farther than d from the cut never cross it
    a = sum(1 for j in spec.unfrozen_between(i - d + 1, i) if w(j) > i)
    b = sum(1 for j in spec.unfrozen_between(i + 1, i + d) if w(j) <= i)
    return Crossing(i, a, b)


def gap(w: Element) -> int:
    """``coxeter_length(w) - disarray(w) / 2``; never negative."""
    return coxeter_length(w) - disarray(w) // 2


def is_tight(w: Element) -> bool:
    return gap(w) == 0
