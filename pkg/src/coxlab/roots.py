"""Crystallographic root systems in the rescaled simple-root basis.

All arithmetic is over the integers: a simple reflection acts on the basis by
``s(lam_t) = lam_t + d[s][t] * lam_s`` and ``s(lam_s) = -lam_s``.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import BudgetExceeded, InsufficientRootHorizon
from .groups import Element, Family, GroupSpec, format_window, identity, simple_reflection
from .statistics import disarray
from .words import Word, coxeter_length, format_word, reduced_words, is_fully_commutative

__all__ = [
    "VARIANTS",
    "RootSystem",
    "Root",
    "root_system_for",
    "reflect_root",
    "height",
    "positive_roots_up_to_height",
    "check_dis_equals_height",
    "min_height_cost",
    "height_costs",
    "check_prop_4_3",
]

RootVector = tuple[int, ...]

VARIANTS = ("default", "long-zero", "long-n", "long-ends")


@dataclass(frozen=True)
class RootSystem:
    """Integer root data for one group.

    ``lengths[k]`` is the squared length of ``lam_{alphabet[k]}``, on a scale
    where the roots lam_1..lam_{n-1} have 2 (so 1 is short, 4 is long);
    ``d[k][l]`` is the coefficient in ``s_k(lam_l) = lam_l + d * lam_k``.
    """

    spec: GroupSpec
    variant: str
    lengths: tuple[int, ...]
    d: tuple[tuple[int, ...], ...]

    @property
    def letters(self) -> tuple[int, ...]:
        return self.spec.alphabet

    def index(self, letter: int) -> int:
        return self.letters.index(self.spec.normalize_letter(letter))

    def dval(self, s: int, t: int) -> int:
        return self.d[self.index(s)][self.index(t)]

    def simple_root(self, letter: int) -> RootVector:
        k = self.index(letter)
        return tuple(1 if x == k else 0 for x in range(len(self.letters)))


def _d_entry(m: float, len_s: int, len_t: int) -> int:
    if m == 2:
        return 0
    if m == 3:
        return 1
    if m == math.inf:
        return 2
    if m == 4:
        return 2 if len_t > len_s else 1
    if m == 6:
        return 3 if len_t > len_s else 1
    raise ValueError(f"edge label {m} is not crystallographic")


def root_system_for(spec: GroupSpec, variant: str = "default") -> RootSystem:
    """Root data for ``spec``.

    ``default`` makes the sign-change roots short: lam_0 in family ``b`` and
    both lam_0 and lam_n in ``affc`` (Macdonald's C^vee_n).  The other variants
    make lam_0, lam_n or both long instead; simply-laced families only accept
    ``default``.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown root-system variant {variant!r}")
    letters = spec.alphabet
    n = spec.n
    if spec.family in (Family.A, Family.AFFINE_A):
        if variant != "default":
            raise ValueError(f"{spec} has a single root system; variant must be 'default'")
        lengths = [2] * len(letters)
    else:
        long_zero = variant in ("long-zero", "long-ends")
        long_n = variant in ("long-n", "long-ends")
        if spec.family is Family.B and long_n:
            raise ValueError("family b has no generator s_n")
        lengths = []
        for s in letters:
            if s == 0:
                lengths.append(4 if long_zero else 1)
            elif spec.family is Family.AFFINE_C and s == n:
                lengths.append(4 if long_n else 1)
            else:
                lengths.append(2)
    d = tuple(
        tuple(
            0 if s == t else _d_entry(spec.coxeter_m(s, t), lengths[i], lengths[j])
            for j, t in enumerate(letters)
        )
        for i, s in enumerate(letters)
    )
    return RootSystem(spec, variant, tuple(lengths), d)


def reflect_root(rs: RootSystem, s: int, v: RootVector) -> RootVector:
    k = rs.index(s)
    row = rs.d[k]
    new = -v[k] + sum(row[j] * v[j] for j in range(len(v)) if j != k)
    return v[:k] + (new,) + v[k + 1 :]


def height(v: Iterable[int]) -> int:
    return sum(v)


@dataclass(frozen=True)
class Root:
    """A positive root, its reflection, and a word ``u s u^{-1}`` for that reflection."""

    coeffs: RootVector
    reflection: Element
    word: Word

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> dict:
        return {
            "coeffs": list(self.coeffs),
            "height": self.height,
            "reflection_window": format_window(self.reflection.window),
            "witness_word": format_word(self.word),
        }


def positive_roots_up_to_height(
    rs: RootSystem, max_height: int, budget: Optional[int] = None
) -> list[Root]:
    """Positive roots of height at most ``max_height``, sorted by height then coefficients.

    Every non-simple positive root is lifted from a strictly lower positive root
    by a simple reflection, so a search that never leaves the height bound is
    complete.  A root ``u(lam_s)`` is paired with the reflection ``u s u^{-1}``.
    """
    spec = rs.spec
    found: dict[RootVector, Root] = {}
    queue: deque[tuple[RootVector, Word]] = deque()
    e = identity(spec)
    if max_height >= 1:
        for s in rs.letters:
            v = rs.simple_root(s)
            found[v] = Root(v, e.right_mul_generator(s), (s,))
            queue.append((v, ()))
    while queue:
        v, u = queue.popleft()
        root = found[v]
        for s in rs.letters:
            w = reflect_root(rs, s, v)
            if w in found or min(w) < 0 or sum(w) > max_height:
                continue
            # (s u) s_core (s u)^{-1} = s t s
            t = root.reflection
            new_t = simple_reflection(spec, s) * t.right_mul_generator(s)
            new_u = (s,) + u
            core = root.word[len(u)]
            found[w] = Root(w, new_t, new_u + (core,) + tuple(reversed(new_u)))
            queue.append((w, new_u))
            if budget is not None and len(found) > budget:
                raise BudgetExceeded(f"more than {budget} positive roots")
    return sorted(found.values(), key=lambda r: (r.height, r.coeffs))


def check_dis_equals_height(
    spec: GroupSpec, max_height: int, variant: str = "default"
) -> dict:
    """Compare ``disarray(t) / 2`` with the height of ``lam_t`` for every positive root."""
    rs = root_system_for(spec, variant)
    roots = positive_roots_up_to_height(rs, max_height)
    rows, mismatches = [], []
    for r in roots:
        half_dis = disarray(r.reflection) // 2
        row = r.to_json() | {"half_disarray": half_dis}
        rows.append(row)
        if half_dis != r.height:
            mismatches.append(row)
    return {
        "spec": {"family": spec.family.value, "n": spec.n},
        "variant": variant,
        "H": max_height,
        "roots": rows,
        "mismatches": mismatches,
        "passed": not mismatches,
    }


def _reflection_edges(rs: RootSystem, horizon: int) -> list[tuple[int, Element]]:
    return [(r.height, r.reflection) for r in positive_roots_up_to_height(rs, horizon)]


def min_height_cost(
    w: Element, rs: Optional[RootSystem] = None, horizon: Optional[int] = None
) -> int:
    """Cheapest factorization of ``w`` into reflections, a reflection costing its root height.

    Reflections are harvested up to height ``horizon`` (default: the Coxeter
    length, which always suffices because the answer is at most that).
    """
    if rs is None:
        rs = root_system_for(w.spec)
    if horizon is None:
        horizon = coxeter_length(w)
    edges = _reflection_edges(rs, horizon)
    start = identity(w.spec)
    best = {start: 0}
    heap = [(0, start.window, start)]
    while heap:
        cost, _, x = heapq.heappop(heap)
        if cost > best.get(x, math.inf):
            continue
        if x == w:
            if cost > horizon + 1:
                raise InsufficientRootHorizon(
                    f"cost {cost} found with roots of height <= {horizon}; cannot certify"
                )
            return cost
        for h, t in edges:
            y = x * t
            c = cost + h
            if c < best.get(y, math.inf):
                best[y] = c
                heapq.heappush(heap, (c, y.window, y))
    raise InsufficientRootHorizon(f"{w} is unreachable with roots of height <= {horizon}")


def height_costs(rs: RootSystem, max_cost: int) -> dict[Element, int]:
    """Minimum height-cost of every element whose cost is at most ``max_cost``."""
    edges = _reflection_edges(rs, max_cost)
    start = identity(rs.spec)
    best = {start: 0}
    done: dict[Element, int] = {}
    heap = [(0, start.window, start)]
    while heap:
        cost, _, x = heapq.heappop(heap)
        if x in done:
            continue
        done[x] = cost
        for h, t in edges:
            c = cost + h
            if c > max_cost:
                continue
            y = x * t
            if c < best.get(y, math.inf):
                best[y] = c
                heapq.heappush(heap, (c, y.window, y))
    return done


def check_prop_4_3(
    spec: GroupSpec,
    max_length: Optional[int] = None,
    variant: str = "default",
    *,
    census=None,
) -> dict:
    """For every element whose height-cost equals its length: each factor
    ``s t s`` of each reduced word must have an infinite edge or a longer middle
    root, and the element must be fully commutative.

    Fully commutative elements that are cheaper than their length are listed as
    candidates bearing on the converse, without any assertion.
    """
    from .enumeration import bfs_by_length

    rs = root_system_for(spec, variant)
    if census is None:
        census = bfs_by_length(spec, max_length)
    top = len(census.layers) - 1
    costs = height_costs(rs, top)
    memo: dict = {}
    failures, candidates = [], []
    tight_count = 0
    for length, w in census.with_lengths():
        cost = costs[w]
        fc = is_fully_commutative(w, memo=memo)
        if cost != length:
            if fc:
                candidates.append(format_window(w.window))
            continue
        tight_count += 1
        bad_factor = None
        for word in sorted(reduced_words(w, memo=memo)):
            for s, t, s2 in zip(word, word[1:], word[2:]):
                if s != s2:
                    continue
                if not (spec.coxeter_m(s, t) == math.inf or rs.lengths[rs.index(t)] > rs.lengths[rs.index(s)]):
                    bad_factor = {"word": format_word(word), "factor": [s, t, s]}
                    break
            if bad_factor:
                break
        if bad_factor or not fc:
            failures.append(
                {"window": format_window(w.window), "fully_commutative": fc, "bad_factor": bad_factor}
            )
    return {
        "spec": {"family": spec.family.value, "n": spec.n},
        "variant": variant,
        "L": max_length,
        "cost_tight": tight_count,
        "failures": failures,
        "converse_candidates": candidates,
        "passed": not failures,
    }
