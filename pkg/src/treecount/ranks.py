"""Ordinals below w^2, ranks read off counting polynomials, and path independence."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph, convex_closure, distances_from, unique_path
from .poly import Poly2


@dataclass(frozen=True, order=True)
class OrdinalPair:
    """The ordinal ``w*m + n``."""

    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise DomainError("ordinal coefficients must be non-negative")

    def __str__(self) -> str:
        return f"w*{self.m}+{self.n}" if self.m else str(self.n)


ZERO = OrdinalPair(0, 0)
OMEGA = OrdinalPair(1, 0)


def hessenberg_add(x: OrdinalPair, y: OrdinalPair) -> OrdinalPair:
    return OrdinalPair(x.m + y.m, x.n + y.n)


def hessenberg_sum(items: Iterable[OrdinalPair]) -> OrdinalPair:
    total = ZERO
    for x in items:
        total = hessenberg_add(total, x)
    return total


def rank_from_poly(p: Poly2) -> OrdinalPair:
    if p.is_zero():
        raise DomainError("the zero polynomial counts the empty set, which has no rank")
    return OrdinalPair(*p.leading())


def ordinal_distance(g: Graph, b: int, base: Iterable[int]) -> OrdinalPair:
    hull = convex_closure(g, base)
    if b in hull:
        return ZERO
    dist = distances_from(g, b)
    found = [int(dist[v]) for v in hull if dist[v] >= 0]
    return OrdinalPair(0, min(found)) if found else OMEGA


def tuple_rank(g: Graph, tup: Iterable[int], base: Iterable[int]) -> OrdinalPair:
    known = list(base)
    total = ZERO
    for b in tup:
        total = hessenberg_add(total, ordinal_distance(g, b, known))
        known.append(b)
    return total


def is_independent(g: Graph, a_set: Iterable[int], b_set: Iterable[int], c_set: Iterable[int]) -> bool:
    """True iff every path from hull(A) to hull(B) meets hull(C)."""
    a_hull = convex_closure(g, a_set)
    b_hull = convex_closure(g, b_set)
    c_hull = convex_closure(g, c_set)
    for a in sorted(a_hull):
        dist = distances_from(g, a)
        for b in sorted(b_hull):
            if dist[b] < 0:
                continue
            if c_hull.isdisjoint(unique_path(g, a, b)):
                return False
    return True

