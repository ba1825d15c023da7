"""Global 321 detection and classical signed-pattern containment."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import FamilyMismatch, WindowInvalid
from .groups import Element, Family, GroupSpec, from_window

__all__ = [
    "PatternWitness",
    "SignedPattern",
    "P_PATTERNS",
    "displacement_bound",
    "contains_global_321",
    "classical_contains",
    "avoids_P",
]


@dataclass(frozen=True)
class PatternWitness:
    i: int
    j: int
    k: int
    wi: int
    wj: int
    wk: int

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k, "wi": self.wi, "wj": self.wj, "wk": self.wk}


@dataclass(frozen=True)
class SignedPattern:
    """A signed permutation used as a classical pattern, e.g. ``(1, -2)``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise WindowInvalid("empty pattern")
        from_window(GroupSpec(Family.B, len(entries)), entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "".join(f"-{-e}" if e < 0 else str(e) for e in self.entries)


# 12-bar, 1-bar 2-bar, 321, 32 1-bar, 3-bar 21, 3-bar 2 1-bar
P_PATTERNS = tuple(
    SignedPattern(p)
    for p in [(1, -2), (-1, -2), (3, 2, 1), (3, 2, -1), (-3, 2, 1), (-3, 2, -1)]
)


def displacement_bound(w: Element) -> int:
    """Largest ``|w(x) - x|`` over unfrozen ``x``.

    Every domain symmetry maps ``x -> +-x + c`` and commutes with ``w``, so the
    window already attains the maximum.
    """
    return max((abs(v - i) for i, v in enumerate(w.window, start=1)), default=0)


def contains_global_321(w: Element) -> Optional[PatternWitness]:
    """A global 321 occurrence ``i < j < k``, ``w(i) > w(j) > w(k)``, or None.

    The middle position is searched in the window 1..n only: translations and
    reflections of the domain commute with ``w`` and map 321 occurrences to 321
    occurrences, and every unfrozen integer is carried into 1..n by one of them.
    Given ``j``, any ``i`` with ``w(i) > w(j)`` has ``i >= w(i) - D > w(j) - D``
    and symmetrically for ``k``, so the scans below are finite and complete.
    The witness returned uses the smallest ``j``, then the ``i`` and ``k``
    nearest to it.
    """
    spec = w.spec
    d = displacement_bound(w)
    if d == 0:
        return None
    for j in range(1, spec.n + 1):
        wj = w(j)
        i_hit = next(
            (i for i in reversed(spec.unfrozen_between(wj - d + 1, j - 1)) if w(i) > wj),
            None,
        )
        if i_hit is None:
            continue
        k_hit = next((k for k in spec.unfrozen_between(j + 1, wj + d - 1) if w(k) < wj), None)
        if k_hit is not None:
            return PatternWitness(i_hit, j, k_hit, w(i_hit), wj, w(k_hit))
    return None


def _signed_window(w: Element) -> tuple[int, ...]:
    if w.spec.family not in (Family.A, Family.B):
        raise FamilyMismatch(f"classical signed patterns need a finite family, got {w.spec}")
    return w.window


def classical_contains(w: Element, p: SignedPattern | Sequence[int]) -> bool:
    """Signs match entrywise and absolute values are order-isomorphic, at positions 1..n."""
    if not isinstance(p, SignedPattern):
        p = SignedPattern(tuple(p))
    window = _signed_window(w)
    pat = p.entries
    k = len(pat)
    pat_abs = [abs(x) for x in pat]
    for positions in itertools.combinations(range(len(window)), k):
        vals = [window[i] for i in positions]
        if any(v * s < 0 for v, s in zip(vals, pat)):
            continue
        absvals = [abs(v) for v in vals]
        if all(
            (absvals[x] < absvals[y]) == (pat_abs[x] < pat_abs[y])
            for x in range(k)
            for y in range(k)
        ):
            return True
    return False


def avoids_P(w: Element) -> bool:
    return not any(classical_contains(w, p) for p in P_PATTERNS)
