"""Window notation for the four unbranched George groups.

The groups are permutation groups of (subsets of) the integers:

============  ====================  =======================================
family        unfrozen integers     symmetries respected
============  ====================  =======================================
``a``         1..n                  none
``b``         -n..-1, 1..n          w(-i) = -w(i)
``affa``      all of Z              w(i + n) = w(i) + n
``affc``      Z minus (n+1)Z        w(-i) = -w(i), w(2(n+1) - i) = 2(n+1) - w(i)
============  ====================  =======================================

An element is stored as its window ``(w(1), ..., w(n))``; the symmetries
determine everything else.  Products compose right to left:
``(u * v)(x) == u(v(x))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional

from .errors import LetterOutOfAlphabet, SpecMismatch, WindowInvalid

__all__ = [
    "Family",
    "GroupSpec",
    "Element",
    "identity",
    "from_window",
    "apply",
    "multiply",
    "inverse",
    "simple_reflection",
    "symmetry_class",
    "is_frozen",
    "parse_window",
    "format_window",
]

INF = math.inf


class Family(str, Enum):
    A = "a"
    B = "b"
    AFFINE_A = "affa"
    AFFINE_C = "affc"


_MIN_RANK = {Family.A: 1, Family.B: 1, Family.AFFINE_A: 2, Family.AFFINE_C: 1}


@dataclass(frozen=True, order=True)
class GroupSpec:
    """A family together with its window size ``n``."""

    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.n, int) or self.n < _MIN_RANK[self.family]:
            raise ValueError(
                f"family {self.family.value} needs n >= {_MIN_RANK[self.family]}, got {self.n!r}"
            )

    def __str__(self):
        return f"{self.family.value}{self.n}"

    @property
    def is_affine(self) -> bool:
        return self.family in (Family.AFFINE_A, Family.AFFINE_C)

    @property
    def is_finite(self) -> bool:
        return not self.is_affine

    @property
    def is_degenerate(self) -> bool:
        """True for the two infinite dihedral cases, affa2 and affc1."""
        return (self.family, self.n) in ((Family.AFFINE_A, 2), (Family.AFFINE_C, 1))

    @property
    def period(self) -> Optional[int]:
        """Translation period of the domain symmetry, or None for finite families."""
        if self.family is Family.AFFINE_A:
            return self.n
        if self.family is Family.AFFINE_C:
            return 2 * (self.n + 1)
        return None

    @cached_property
    def alphabet(self) -> tuple[int, ...]:
        n = self.n
        if self.family is Family.A:
            return tuple(range(1, n))
        if self.family is Family.AFFINE_C:
            return tuple(range(0, n + 1))
        return tuple(range(0, n))

    def normalize_letter(self, letter: int) -> int:
        """Map a generator label onto the canonical alphabet (``affa``: n -> 0)."""
        if self.family is Family.AFFINE_A and letter == self.n:
            letter = 0
        if letter not in self.alphabet:
            raise LetterOutOfAlphabet(f"letter {letter} is not a generator of {self}")
        return letter

    def generator(self, label: int) -> Optional[int]:
        """Canonical letter of s_label, or None when the group has no such generator."""
        try:
            return self.normalize_letter(label)
        except LetterOutOfAlphabet:
            return None

    def transposed_positions(self, letter: int) -> tuple[int, int]:
        """The consecutive unfrozen positions ``a < a'`` swapped by a simple reflection."""
        letter = self.normalize_letter(letter)
        if letter == 0:
            if self.family is Family.AFFINE_A:
                return (0, 1)
            return (-1, 1)
        if letter == self.n:  # only affc reaches here
            return (self.n, self.n + 2)
        return (letter, letter + 1)

    def coxeter_m(self, s: int, t: int) -> float:
        """Order of s*t, read off the Coxeter-Dynkin diagram (``math.inf`` for an infinite edge)."""
        s, t = self.normalize_letter(s), self.normalize_letter(t)
        if s == t:
            return 1
        n, fam = self.n, self.family
        if self.is_degenerate:
            return INF
        if fam is Family.AFFINE_A:
            return 3 if (s - t) % n in (1, n - 1) else 2
        if abs(s - t) != 1:
            return 2
        lo, hi = min(s, t), max(s, t)
        if fam in (Family.B, Family.AFFINE_C) and lo == 0:
            return 4
        if fam is Family.AFFINE_C and hi == n:
            return 4
        return 3

    def is_frozen(self, i: int) -> bool:
        """Frozen (or out-of-domain) integers are fixed by every element."""
        return _reduce(self, i) is None

    def unfrozen_between(self, lo: int, hi: int) -> list[int]:
        """Unfrozen integers in the closed interval [lo, hi]."""
        return [x for x in range(lo, hi + 1) if not self.is_frozen(x)]


def _reduce(spec: GroupSpec, i: int) -> Optional[tuple[int, int, int]]:
    """Write ``i = sign * r + shift`` with ``r`` in 1..n and ``x -> sign*x + shift``
    a domain symmetry; None when ``i`` is frozen."""
    n, fam = spec.n, spec.family
    if fam is Family.A:
        return (i, 1, 0) if 1 <= i <= n else None
    if fam is Family.B:
        if 1 <= i <= n:
            return (i, 1, 0)
        if -n <= i <= -1:
            return (-i, -1, 0)
        return None
    if fam is Family.AFFINE_A:
        q, r = divmod(i - 1, n)
        return (r + 1, 1, q * n)
    big = 2 * (n + 1)
    q, r = divmod(i, big)
    if r == 0 or r == n + 1:
        return None
    if r <= n:
        return (r, 1, q * big)
    return (big - r, -1, (q + 1) * big)


@dataclass(frozen=True, order=True)
class Element:
    """A group element in window notation.

    Construct validated elements with :func:`from_window`; the bare
    constructor trusts its input.  Calling an element applies it to an integer.
    """

    spec: GroupSpec
    window: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __invert__(self) -> Element:
        return inverse(self)

    def __str__(self):
        return format_window(self.window)

    def right_mul_generator(self, letter: int) -> Element:
        """``self * s_letter``; permutes positions of the window."""
        spec = self.spec
        letter = spec.normalize_letter(letter)
        n, w = spec.n, list(self.window)
        if letter == 0:
            if spec.family is Family.AFFINE_A:
                w[0], w[n - 1] = w[n - 1] - n, w[0] + n
            else:
                w[0] = -w[0]
        elif letter == n:
            w[n - 1] = 2 * (n + 1) - w[n - 1]
        else:
            w[letter - 1], w[letter] = w[letter], w[letter - 1]
        return Element(spec, tuple(w))

    @property
    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.spec.n + 1))


def identity(spec: GroupSpec) -> Element:
    return Element(spec, tuple(range(1, spec.n + 1)))


def _validate(spec: GroupSpec, window: tuple[int, ...]) -> None:
    n, fam = spec.n, spec.family
    if len(window) != n:
        raise WindowInvalid(f"window length {len(window)} != n = {n}")
    if fam is Family.A:
        if sorted(window) != list(range(1, n + 1)):
            raise WindowInvalid(f"{window} is not a permutation of 1..{n}")
    elif fam is Family.B:
        if any(v == 0 or abs(v) > n for v in window):
            raise WindowInvalid(f"{window} has an entry outside [-{n}, {n}] or equal to 0")
        if len({abs(v) for v in window}) != n:
            raise WindowInvalid(f"{window} repeats an absolute value")
    elif fam is Family.AFFINE_A:
        if len({v % n for v in window}) != n:
            raise WindowInvalid(f"{window} repeats a residue mod {n}")
        if sum(window) != n * (n + 1) // 2:
            raise WindowInvalid(f"{window} sums to {sum(window)}, expected {n * (n + 1) // 2}")
    else:
        m = n + 1
        for v in window:
            if v % m == 0:
                raise WindowInvalid(f"{window} maps to the frozen value {v}")
        residues = {v % (2 * m) for v in window} | {-v % (2 * m) for v in window}
        if len(residues) != 2 * n:
            raise WindowInvalid(f"{window} repeats a residue class up to sign mod {2 * m}")


def from_window(spec: GroupSpec, values: Iterable[int]) -> Element:
    """Validated element with the given window; raises :class:`WindowInvalid`."""
    window = tuple(int(v) for v in values)
    _validate(spec, window)
    return Element(spec, window)


def apply(w: Element, i: int) -> int:
    """Image of any integer; frozen and out-of-domain integers are fixed."""
    red = _reduce(w.spec, i)
    if red is None:
        return i
    r, sign, shift = red
    return sign * w.window[r - 1] + shift


def multiply(u: Element, v: Element) -> Element:
    if u.spec != v.spec:
        raise SpecMismatch(f"cannot multiply elements of {u.spec} and {v.spec}")
    return Element(u.spec, tuple(apply(u, x) for x in v.window))


def inverse(u: Element) -> Element:
    spec = u.spec
    out = [0] * spec.n
    for i, y in enumerate(u.window, start=1):
        # u(i) = sign*r + shift, so u^{-1}(r) = sign*(i - shift)
        r, sign, shift = _reduce(spec, y)
        out[r - 1] = sign * (i - shift)
    return Element(spec, tuple(out))


def simple_reflection(spec: GroupSpec, letter: int) -> Element:
    return identity(spec).right_mul_generator(letter)


def symmetry_class(spec: GroupSpec, i: int) -> Optional[int]:
    """Representative in 1..n of the symmetry class of ``i``; None if frozen."""
    red = _reduce(spec, i)
    return None if red is None else red[0]


def is_frozen(spec: GroupSpec, i: int) -> bool:
    return spec.is_frozen(i)


def parse_window(text: str) -> tuple[int, ...]:
    """Parse ``"-1,-2"`` (commas and/or whitespace) into integers."""
    parts = text.replace(",", " ").split()
    if not parts:
        raise WindowInvalid("empty window")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise WindowInvalid(f"cannot parse window {text!r}") from exc


def format_window(window: Iterable[int]) -> str:
    return ",".join(str(v) for v in window)
