"""Coxeter length, descents and reduced words."""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded
from .groups import Element, GroupSpec, identity

Word = tuple[int, ...]

__all__ = [
    "Word",
    "ReducedWords",
    "right_descents",
    "coxeter_length",
    "word_to_element",
    "is_reduced",
    "reduced_words",
    "iter_reduced_words",
    "condition_B",
    "condition_Bprime",
    "is_fully_commutative",
    "parse_word",
    "format_word",
]


def right_descents(w: Element) -> frozenset[int]:
    """Letters s with l(w*s) < l(w): s swaps positions a < a' and w(a) > w(a')."""
    spec = w.spec
    out = []
    for s in spec.alphabet:
        a, b = spec.transposed_positions(s)
        if w(a) > w(b):
            out.append(s)
    return frozenset(out)


def _first_descent(w: Element) -> Optional[int]:
    spec = w.spec
    for s in spec.alphabet:
        a, b = spec.transposed_positions(s)
        if w(a) > w(b):
            return s
    return None


def coxeter_length(w: Element) -> int:
    # strip right descents one at a time; each strip lowers the length by exactly one
    steps = 0
    s = _first_descent(w)
    while s is not None:
        w = w.right_mul_generator(s)
        steps += 1
        s = _first_descent(w)
    return steps


def word_to_element(spec: GroupSpec, word: Iterable[int]) -> Element:
    w = identity(spec)
    for letter in word:
        w = w.right_mul_generator(letter)
    return w


def is_reduced(spec: GroupSpec, word: Sequence[int]) -> bool:
    return len(word) == coxeter_length(word_to_element(spec, word))


class ReducedWords(frozenset):
    """A frozenset of words that remembers whether it was cut off by a cap."""

    def __new__(cls, words: Iterable[Word] = (), truncated: bool = False):
        self = super().__new__(cls, words)
        self.truncated = truncated
        return self

    def __repr__(self):
        return f"ReducedWords({sorted(self)!r}, truncated={self.truncated})"


def iter_reduced_words(w: Element) -> Iterator[Word]:
    """Lazily yield every reduced word of ``w`` (no duplicates, lexicographic in reverse)."""
    if w.is_identity:
        yield ()
        return
    for s in sorted(right_descents(w)):
        for prefix in iter_reduced_words(w.right_mul_generator(s)):
            yield prefix + (s,)


def _all_reduced_words(w: Element, memo: dict) -> frozenset[Word]:
    hit = memo.get(w)
    if hit is not None:
        return hit
    if w.is_identity:
        words = frozenset([()])
    else:
        words = frozenset(
            prefix + (s,)
            for s in right_descents(w)
            for prefix in _all_reduced_words(w.right_mul_generator(s), memo)
        )
    memo[w] = words
    return words


def reduced_words(
    w: Element,
    cap: Optional[int] = None,
    *,
    complete: bool = False,
    memo: Optional[dict] = None,
) -> ReducedWords:
    """All reduced words of ``w``.

    With ``cap`` at most that many words are produced and ``.truncated`` is set
    when more exist; ``complete=True`` turns truncation into :class:`CapExceeded`.
    ``memo`` may be shared between calls on elements of the same group.
    """
    if cap is None:
        return ReducedWords(_all_reduced_words(w, {} if memo is None else memo))
    words = list(itertools.islice(iter_reduced_words(w), cap + 1))
    truncated = len(words) > cap
    if truncated and complete:
        raise CapExceeded(f"{w} has more than {cap} reduced words")
    return ReducedWords(words[:cap], truncated=truncated)


def _neighbours(spec: GroupSpec, i: int) -> list[int]:
    """Existing generators s_{i-1}, s_{i+1} (deduplicated)."""
    out = []
    for label in (i - 1, i + 1):
        g = spec.generator(label)
        if g is not None and g not in out:
            out.append(g)
    return out


def _word_satisfies_B(spec: GroupSpec, word: Word) -> bool:
    for i in range(1, spec.n):
        needed = {spec.generator(i - 1), spec.generator(i + 1)}
        last = None
        for pos, letter in enumerate(word):
            if letter != i:
                continue
            if last is not None:
                between = set(word[last + 1 : pos])
                # a missing generator (None) can never be found between
                if not needed <= between:
                    return False
            last = pos
    return True


def _word_has_short_braid(spec: GroupSpec, word: Word) -> bool:
    for x, y, z in zip(word, word[1:], word[2:]):
        if x == z and 1 <= x <= spec.n - 1 and y in _neighbours(spec, x):
            return True
    return False


def condition_B(w: Element, *, memo: Optional[dict] = None) -> bool:
    """Every two copies of i in [n-1] are separated by both s_{i-1} and s_{i+1}, in every reduced word."""
    spec = w.spec
    return all(_word_satisfies_B(spec, word) for word in reduced_words(w, memo=memo))


def condition_Bprime(w: Element, *, memo: Optional[dict] = None) -> bool:
    """No reduced word has a consecutive factor i (i+-1) i with i in [n-1]."""
    spec = w.spec
    return not any(_word_has_short_braid(spec, word) for word in reduced_words(w, memo=memo))


def _word_has_long_braid(spec: GroupSpec, word: Word) -> bool:
    for start in range(len(word) - 2):
        s, t = word[start], word[start + 1]
        if s == t:
            continue
        m = spec.coxeter_m(s, t)
        if m == math.inf or m < 3 or start + m > len(word):
            continue
        m = int(m)
        if all(word[start + k] == (s if k % 2 == 0 else t) for k in range(m)):
            return True
    return False


def is_fully_commutative(w: Element, *, memo: Optional[dict] = None) -> bool:
    """No reduced word contains an alternating factor s t s ... of length m(s, t)."""
    spec = w.spec
    return not any(_word_has_long_braid(spec, word) for word in reduced_words(w, memo=memo))


def parse_word(spec: GroupSpec, tokens: Iterable[str] | str) -> Word:
    if isinstance(tokens, str):
        tokens = [tokens]
    letters = []
    for tok in tokens:
        for part in tok.replace(",", " ").split():
            letters.append(spec.normalize_letter(int(part)))
    return tuple(letters)


def format_word(word: Word) -> str:
    return " ".join(str(x) for x in word)
