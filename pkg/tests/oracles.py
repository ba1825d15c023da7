"""Slow, independent reference computations used to check the library.

Nothing here calls the descent test, the greedy length, the bounded 321 search,
or the root search; group elements are only evaluated and multiplied.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

from coxlab.groups import Element, GroupSpec, identity, multiply, simple_reflection


def positions_for_scan(spec: GroupSpec, periods: int = 5) -> list[int]:
    if spec.is_finite:
        return spec.unfrozen_between(-spec.n, spec.n)
    p = spec.period
    lo = -(periods // 2) * p + 1
    return spec.unfrozen_between(lo, lo + periods * p - 1)


def brute_force_321(w: Element, periods: int = 5) -> bool:
    pos = positions_for_scan(w.spec, periods)
    vals = [w(x) for x in pos]
    for a, b, c in itertools.combinations(range(len(pos)), 3):
        if vals[a] > vals[b] > vals[c]:
            return True
    return False


def cayley_distances(spec: GroupSpec, max_length: int) -> dict[tuple[int, ...], int]:
    """Plain BFS distance from the identity, via generic multiplication."""
    gens = [simple_reflection(spec, s) for s in spec.alphabet]
    start = identity(spec)
    dist = {start.window: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        d = dist[x.window]
        if d == max_length:
            continue
        for g in gens:
            y = multiply(x, g)
            if y.window not in dist:
                dist[y.window] = d + 1
                queue.append(y)
    return dist


def word_product(spec: GroupSpec, word) -> Element:
    x = identity(spec)
    for letter in word:
        x = multiply(x, simple_reflection(spec, letter))
    return x


def brute_reduced_words(w: Element, length: int) -> set[tuple[int, ...]]:
    """All words of the given length spelling ``w`` (reduced when length is minimal)."""
    spec = w.spec
    return {
        word
        for word in itertools.product(spec.alphabet, repeat=length)
        if word_product(spec, word) == w
    }


def brute_crossing(w: Element, i: int, radius: int = 60) -> tuple[int, int]:
    spec = w.spec
    a = sum(1 for j in spec.unfrozen_between(i - radius, i) if w(j) > i)
    b = sum(1 for j in spec.unfrozen_between(i + 1, i + radius) if w(j) <= i)
    return a, b


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def central_binomial(n: int) -> int:
    return math.comb(2 * n, n)


def brute_min_cost(w: Element, edges: list[tuple[int, Element]], max_factors: int) -> int:
    """Cheapest product of at most ``max_factors`` weighted reflections equal to ``w``."""
    best = 0 if w == identity(w.spec) else math.inf
    frontier = {identity(w.spec): 0}
    for _ in range(max_factors):
        nxt: dict[Element, int] = {}
        for x, c in frontier.items():
            for h, t in edges:
                y = multiply(x, t)
                if c + h < nxt.get(y, math.inf):
                    nxt[y] = c + h
        frontier = nxt
        if w in frontier:
            best = min(best, frontier[w])
    return best
