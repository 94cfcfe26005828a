"""Finite simple graphs with distance, path and hull primitives.

Vertices are dense ids ``0..n-1``. Adjacency is stored in CSR form
(``indptr``, ``indices``) with each neighbour list sorted ascending; the
arrays are read-only, so a :class:`Graph` is immutable once built.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import DomainError, InputFormatError, LocalCycleError, NoPathError

INFINITE = math.inf


@dataclass(frozen=True)
class AboveCutoff:
    """Girth result when no cycle of length ``<= cutoff`` exists."""

    cutoff: int

    def __str__(self) -> str:
        return f"> {self.cutoff}"


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> Graph:
        """Build from an edge list; duplicates are merged, direction ignored."""
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if len(arr):
            if arr.min() < 0 or arr.max() >= n:
                raise DomainError("edge endpoint out of range")
            if np.any(arr[:, 0] == arr[:, 1]):
                raise DomainError("self-loop")
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
        return cls._from_arcs(n, src, dst)

    @classmethod
    def _from_arcs(cls, n: int, src: np.ndarray, dst: np.ndarray) -> Graph:
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        if len(src):
            keep = np.ones(len(src), dtype=bool)
            keep[1:] = (src[1:] != src[:-1]) | (dst[1:] != dst[:-1])
            src, dst = src[keep], dst[keep]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        indices = np.ascontiguousarray(dst, dtype=np.int64)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        return cls(n, indptr, indices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        ptr, idx = self.indptr.tolist(), self.indices.tolist()
        return tuple(tuple(idx[ptr[v] : ptr[v + 1]]) for v in range(self.n))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        mask = src < self.indices
        return list(zip(src[mask].tolist(), self.indices[mask].tolist()))

    def edge_array(self) -> np.ndarray:
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        mask = src < self.indices
        return np.stack([src[mask], self.indices[mask]], axis=1)

    def has_edge(self, u: int, v: int) -> bool:
        lo, hi = self.indptr[u], self.indptr[u + 1]
        i = np.searchsorted(self.indices[lo:hi], v)
        return bool(i < hi - lo and self.indices[lo + i] == v)

    def relabel(self, perm: np.ndarray) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = np.asarray(perm, dtype=np.int64)
        e = self.edge_array()
        return Graph.from_edges(self.n, perm[e])


# -- file format -------------------------------------------------------------


def load_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-line format."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise InputFormatError("malformed header: counts must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise InputFormatError(f"vertex out of range (n={n}): {line!r}", lineno)
        if a == b:
            raise InputFormatError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b))
    if header is None:
        raise InputFormatError("malformed header: missing 'n m' line")
    if len(edges) != header[1]:
        raise InputFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(g))


# -- degree and girth --------------------------------------------------------


def regular_degree(g: Graph) -> int | None:
    degs = g.degrees()
    if g.n == 0:
        return 0
    d = int(degs[0])
    return d if bool(np.all(degs == d)) else None


def num_components(g: Graph) -> int:
    seen = np.zeros(g.n, dtype=bool)
    count = 0
    for v in range(g.n):
        if not seen[v]:
            verts, _ = _kernels.ball(g.indptr, g.indices, v, -1)
            seen[verts] = True
            count += 1
    return count


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - num_components(g)


def girth(g: Graph, cutoff: int | None = None) -> int | float | AboveCutoff:
    """Length of the shortest cycle.

    Returns ``INFINITE`` for forests. With ``cutoff``, every BFS stops at
    depth ``cutoff/2`` and :class:`AboveCutoff` is returned when no cycle of
    length ``<= cutoff`` exists.
    """
    if is_forest(g):
        return INFINITE
    bound = g.n if cutoff is None else cutoff
    found = _kernels.girth(g.indptr, g.indices, bound)
    if found:
        return int(found)
    return AboveCutoff(cutoff) if cutoff is not None else INFINITE


def girth_exceeds(g: Graph, bound: int) -> bool:
    """True iff every cycle of ``g`` is longer than ``bound``."""
    res = girth(g, cutoff=bound)
    return isinstance(res, AboveCutoff) or res > bound


# -- distances ---------------------------------------------------------------


def ball(g: Graph, source: int, radius: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Vertices within ``radius`` of ``source`` in BFS order, with distances."""
    return _kernels.ball(g.indptr, g.indices, source, -1 if radius is None else radius)


def distances_from(g: Graph, source: int, radius: int | None = None) -> np.ndarray:
    """Dense distance array from ``source``; ``-1`` marks unreached vertices."""
    verts, dists = ball(g, source, radius)
    out = np.full(g.n, -1, dtype=np.int64)
    out[verts] = dists
    return out


def dist(g: Graph, u: int, v: int) -> int | float:
    if u == v:
        return 0
    d = distances_from(g, u)[v]
    return INFINITE if d < 0 else int(d)


def dist_to_set(g: Graph, b: int, targets: Iterable[int]) -> int | float:
    targets = set(targets)
    if not targets:
        return INFINITE
    verts, dists = ball(g, b)
    for v, d in zip(verts.tolist(), dists.tolist()):
        if v in targets:
            return d
    return INFINITE


def unique_path(g: Graph, u: int, v: int) -> list[int]:
    """The unique shortest path ``u .. v``.

    Shortest paths are counted (saturating at 2) layer by layer; more than
    one raises :class:`LocalCycleError`.
    """
    if u == v:
        return [u]
    target = dist(g, u, v)
    if target == INFINITE:
        raise NoPathError(f"no path between {u} and {v}")
    adj = g.adjacency
    level = {u: 0}
    count = {u: 1}
    frontier = [u]
    for depth in range(1, target + 1):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in level:
                    level[y] = depth
                    count[y] = 0
                    nxt.append(y)
                if level[y] == depth:
                    count[y] = min(2, count[y] + count[x])
        frontier = nxt
    if count[v] > 1:
        raise LocalCycleError(f"two shortest paths between {u} and {v} (length {target})")
    path = [v]
    x = v
    while x != u:
        x = next(y for y in adj[x] if level.get(y) == level[x] - 1)
        path.append(x)
    return path[::-1]


def convex_closure(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """A together with every vertex on a path between finite-distance pairs of A."""
    items = sorted(set(vertices))
    hull = set(items)
    for i, a in enumerate(items):
        row = distances_from(g, a)
        for b in items[i + 1 :]:
            if row[b] > 0:
                hull.update(unique_path(g, a, b))
    return frozenset(hull)


def hull_degree(g: Graph, vertices: Iterable[int], c: int) -> int:
    hull = convex_closure(g, vertices)
    if c not in hull:
        raise DomainError(f"vertex {c} is not in the convex closure")
    return sum(1 for w in g.adjacency[c] if w in hull)


def connected_closure(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for a in vertices:
        if a not in out:
            verts, _ = ball(g, a)
            out.update(verts.tolist())
    return frozenset(out)
