"""Breadth-first enumeration by length and the checks built on top of it."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .errors import BudgetExceeded
from .groups import Element, Family, GroupSpec, format_window, from_window, identity
from .patterns import contains_global_321
from .qpoly import QPolynomial
from .statistics import disarray, gap
from .words import coxeter_length, condition_B, condition_Bprime

__all__ = [
    "DEFAULT_BUDGET",
    "element_budget",
    "LengthCensus",
    "bfs_by_length",
    "avoider_polynomial",
    "catalan_poly_recurrence",
    "typeB_poly_recurrence",
    "verify_recurrence",
    "verify_main_theorem",
    "degenerate_isomorphism_check",
    "to_affine_a2",
]

DEFAULT_BUDGET = 10**6


def element_budget(budget: Optional[int] = None) -> int:
    """Explicit budget, else ``$COXLAB_BUDGET``, else :data:`DEFAULT_BUDGET`."""
    if budget is not None:
        return budget
    env = os.environ.get("COXLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def spec_json(spec: GroupSpec) -> dict:
    return {"family": spec.family.value, "n": spec.n}


@dataclass
class LengthCensus:
    """Elements grouped by Coxeter length; ``layers[l]`` is sorted by window."""

    spec: GroupSpec
    max_length: Optional[int]
    layers: list[list[Element]] = field(default_factory=list)
    saturated: bool = False

    def __iter__(self) -> Iterator[Element]:
        for layer in self.layers:
            yield from layer

    def __len__(self):
        return sum(len(layer) for layer in self.layers)

    def with_lengths(self) -> Iterator[tuple[int, Element]]:
        for length, layer in enumerate(self.layers):
            for w in layer:
                yield length, w

    @property
    def sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]


def bfs_by_length(
    spec: GroupSpec, max_length: Optional[int] = None, budget: Optional[int] = None
) -> LengthCensus:
    """Layers of the Cayley graph from the identity.

    No length function is consulted: the graph is bipartite, so the new layer is
    the neighbourhood of the current one minus the previous one.  Finite families
    may omit ``max_length`` and run to saturation.
    """
    if max_length is None and spec.is_affine:
        raise ValueError(f"{spec} is infinite; give a max_length")
    limit = element_budget(budget)
    gens = spec.alphabet
    prev: set[Element] = set()
    cur = {identity(spec)}
    census = LengthCensus(spec, max_length, [sorted(cur)])
    total = 1
    while True:
        nxt = {x.right_mul_generator(s) for x in cur for s in gens} - prev - cur
        if not nxt:
            census.saturated = True
            break
        if max_length is not None and len(census.layers) > max_length:
            break
        total += len(nxt)
        if total > limit:
            raise BudgetExceeded(
                f"{spec}: more than {limit} elements by length {len(census.layers)}"
            )
        census.layers.append(sorted(nxt))
        prev, cur = cur, nxt
    return census


def avoider_polynomial(
    spec: GroupSpec,
    max_length: Optional[int] = None,
    *,
    census: Optional[LengthCensus] = None,
    budget: Optional[int] = None,
) -> tuple[QPolynomial, bool]:
    """Length generating polynomial of the globally 321-avoiding elements.

    Returns ``(polynomial, truncated)``; ``truncated`` is True whenever the
    census did not exhaust the group (always, for affine families).
    """
    if census is None:
        census = bfs_by_length(spec, max_length, budget)
    coeffs = [0] * len(census.layers)
    for length, w in census.with_lengths():
        if contains_global_321(w) is None:
            coeffs[length] += 1
    return QPolynomial(coeffs), not census.saturated


_q = QPolynomial([0, 1])


@lru_cache(maxsize=None)
def catalan_poly_recurrence(n: int) -> QPolynomial:
    """C_n(q) from C_0 = 1 and C_{m+1} = C_m + sum_{k<m} q^{k+1} C_k C_{m-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return QPolynomial([1])
    m = n - 1
    out = catalan_poly_recurrence(m)
    for k in range(m):
        out = out + QPolynomial.monomial(k + 1) * catalan_poly_recurrence(k) * catalan_poly_recurrence(m - k)
    return out


@lru_cache(maxsize=None)
def typeB_poly_recurrence(n: int) -> QPolynomial:
    """C^B_n(q) from C^B_0 = 1 and

    C^B_{m+1} = (1 - q^{m+1}) C_m + sum_{k=0}^{m} (q^{m-k+1} + q^{k+1}) C_{m-k} C^B_k.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return QPolynomial([1])
    m = n - 1
    out = (1 - QPolynomial.monomial(m + 1)) * catalan_poly_recurrence(m)
    for k in range(m + 1):
        weight = QPolynomial.monomial(m - k + 1) + QPolynomial.monomial(k + 1)
        out = out + weight * catalan_poly_recurrence(m - k) * typeB_poly_recurrence(k)
    return out


def verify_recurrence(spec: GroupSpec, census: Optional[LengthCensus] = None) -> dict:
    """Compare the enumerated avoider polynomial with the recurrence, coefficient by coefficient."""
    if spec.family is Family.A:
        expected = catalan_poly_recurrence(spec.n)
    elif spec.family is Family.B:
        expected = typeB_poly_recurrence(spec.n)
    else:
        raise ValueError(f"no recurrence for {spec}")
    if census is None:
        census = bfs_by_length(spec)
    got, truncated = avoider_polynomial(spec, census=census)
    mismatch = None
    for d in range(max(len(got.coeffs), len(expected.coeffs))):
        a = got.coeffs[d] if d < len(got.coeffs) else 0
        b = expected.coeffs[d] if d < len(expected.coeffs) else 0
        if a != b:
            mismatch = {"degree": d, "enumerated": a, "recurrence": b}
            break
    return {
        "spec": spec_json(spec),
        "enumerated": list(got.coeffs),
        "recurrence": list(expected.coeffs),
        "truncated": truncated,
        "passed": mismatch is None and not truncated,
        "first_mismatch": mismatch,
    }


@dataclass
class TheoremReport:
    spec: GroupSpec
    max_length: Optional[int]
    layers: list[dict]
    disagreements: list[dict]
    negative_gaps: list[str]
    saturated: bool

    @property
    def passed(self) -> bool:
        return not self.disagreements and not self.negative_gaps

    @property
    def uniformly_true(self) -> bool:
        return all(
            row["tight"] == row["avoiding"] == row["condition_b"] == row["count"]
            for row in self.layers
        )

    def to_json(self) -> dict:
        out = {
            "spec": spec_json(self.spec),
            "L": self.max_length,
            "saturated": self.saturated,
            "layers": self.layers,
            "disagreements": self.disagreements,
            "negative_gaps": self.negative_gaps,
            "passed": self.passed,
        }
        if self.uniformly_true:
            out["note"] = "all predicates uniformly true"
        return out


def verify_main_theorem(
    spec: GroupSpec,
    max_length: Optional[int] = None,
    *,
    census: Optional[LengthCensus] = None,
    budget: Optional[int] = None,
) -> TheoremReport:
    """Evaluate tightness, condition (B), global 321-avoidance and, away from
    the degenerate cases, condition (B') on every element up to ``max_length``;
    any element on which they disagree is reported."""
    if census is None:
        census = bfs_by_length(spec, max_length, budget)
    memo: dict = {}
    check_bprime = not spec.is_degenerate
    layers, disagreements, negative = [], [], []
    for length, layer in enumerate(census.layers):
        row = {"length": length, "count": len(layer), "tight": 0, "avoiding": 0, "condition_b": 0}
        if check_bprime:
            row["condition_bprime"] = 0
        for w in layer:
            g = gap(w)
            if g < 0:
                negative.append(format_window(w.window))
            tight = g == 0
            witness = contains_global_321(w)
            avoiding = witness is None
            cond_b = condition_B(w, memo=memo)
            values = [tight, cond_b, avoiding]
            row["tight"] += tight
            row["avoiding"] += avoiding
            row["condition_b"] += cond_b
            cond_bp = None
            if check_bprime:
                cond_bp = condition_Bprime(w, memo=memo)
                row["condition_bprime"] += cond_bp
                values.append(cond_bp)
            if len(set(values)) > 1:
                disagreements.append(
                    {
                        "window": format_window(w.window),
                        "length": length,
                        "tight": tight,
                        "condition_b": cond_b,
                        "condition_bprime": cond_bp,
                        "avoiding": avoiding,
                        "witness": None if witness is None else witness.to_json(),
                    }
                )
        layers.append(row)
    return TheoremReport(spec, max_length, layers, disagreements, negative, census.saturated)


def to_affine_a2(w: Element) -> Element:
    """Conjugate an element of affc1 by f(z) = 2z + 1 into affa2."""
    if (w.spec.family, w.spec.n) != (Family.AFFINE_C, 1):
        raise ValueError(f"expected an element of affc1, got {w.spec}")
    # window entry at z is f^{-1}(w(f(z))) = (w(2z + 1) - 1) / 2
    values = []
    for z in (1, 2):
        image = w(2 * z + 1)
        assert image % 2 == 1
        values.append((image - 1) // 2)
    return from_window(GroupSpec(Family.AFFINE_A, 2), values)


def degenerate_isomorphism_check(max_length: int, budget: Optional[int] = None) -> dict:
    """Push every element of affc1 up to ``max_length`` through the conjugation
    into affa2 and compare length, disarray and 321 status."""
    source = bfs_by_length(GroupSpec(Family.AFFINE_C, 1), max_length, budget)
    target = bfs_by_length(GroupSpec(Family.AFFINE_A, 2), max_length, budget)
    mismatches = []
    images = set()
    for w in source:
        u = to_affine_a2(w)
        images.add(u)
        lw, lu = coxeter_length(w), coxeter_length(u)
        dw, du = disarray(w), disarray(u)
        pw, pu = contains_global_321(w) is None, contains_global_321(u) is None
        if (lw, dw, pw) != (lu, du, pu):
            mismatches.append(
                {
                    "source": format_window(w.window),
                    "image": format_window(u.window),
                    "length": [lw, lu],
                    "disarray": [dw, du],
                    "avoiding": [pw, pu],
                }
            )
    bijective = images == set(target)
    return {
        "L": max_length,
        "elements": len(source),
        "mismatches": mismatches,
        "bijective_on_balls": bijective,
        "passed": not mismatches and bijective,
    }
