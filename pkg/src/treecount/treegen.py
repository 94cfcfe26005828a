"""Finite d-regular graphs of prescribed girth.

* :func:`lift` -- the graph on ``V x {0,1}^E`` where an edge flips exactly its
  own coordinate; keeps the degree and doubles the girth.
* :func:`gen_lifted_complete` -- iterated lifts of ``K_{d+1}``.
* :func:`gen_random_regular` -- seeded random regular graphs with a girth floor.
* :func:`named_graph` -- small shipped fixtures.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import _kernels
from .errors import CapacityError, DomainError, GenerationFailedError
from .graph import Graph, girth, girth_exceeds, load_graph, regular_degree

MAX_LIFT_EDGES = 24
MAX_LIFT_VERTICES = 1 << 22
DEFAULT_ATTEMPTS = 10_000

FIXTURES = ("petersen", "heawood", "tutte_coxeter", "cage_4_8")


@dataclass(frozen=True)
class LiftVertex:
    """A vertex ``(base, labeling)`` of a lift; ``labeling`` bit i <-> edge i."""

    base: int
    labeling: int
    num_edges: int

    @property
    def id(self) -> int:
        return (self.base << self.num_edges) | self.labeling

    @classmethod
    def from_id(cls, vid: int, num_edges: int) -> LiftVertex:
        return cls(vid >> num_edges, vid & ((1 << num_edges) - 1), num_edges)

    def bits(self) -> tuple[int, ...]:
        return tuple((self.labeling >> i) & 1 for i in range(self.num_edges))


@dataclass(frozen=True)
class GenSpec:
    kind: str
    degree: int = 0
    lifts: int = 0
    n: int = 0
    min_girth: int = 0
    seed: int = 0
    name: str = ""


def lift(g: Graph, max_vertices: int = MAX_LIFT_VERTICES) -> Graph:
    edges = g.edge_array()  # sorted by (min endpoint, max endpoint)
    m = len(edges)
    if m > MAX_LIFT_EDGES or g.n * (1 << m) > max_vertices:
        raise CapacityError(
            f"lift needs {g.n} * 2^{m} vertices; limit is |E| <= {MAX_LIFT_EDGES} "
            f"and {max_vertices} vertices"
        )
    size = 1 << m
    labels = np.arange(size, dtype=np.int64)
    src, dst = [], []
    for i, (u, v) in enumerate(edges.tolist()):
        flipped = labels ^ (1 << i)
        src += [u * size + labels, v * size + labels]
        dst += [v * size + flipped, u * size + flipped]
    if not src:
        return Graph.from_edges(g.n * size, [])
    return Graph._from_arcs(g.n * size, np.concatenate(src), np.concatenate(dst))


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of one shortest cycle (small graphs), or None for forests."""
    adj = g.adjacency
    best = None
    for root in range(g.n):
        parent = {root: -1}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * depth[u] + 1 >= len(best):
                break
            for w in adj[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = depth[u] + depth[w] + 1
                    if best is None or length < len(best):
                        left, right = [u], [w]
                        while left[-1] != root:
                            left.append(parent[left[-1]])
                        while right[-1] != root:
                            right.append(parent[right[-1]])
                        cycle = left[::-1] + right[:-1]
                        if len(set(cycle)) == len(cycle) == length:
                            best = cycle
    return best


def lift_cycle(g: Graph) -> list[int]:
    """Explicit cycle of length ``2 * girth(g)`` in ``lift(g)``.

    Walk the base cycle twice: the first pass switches the traversed edge
    bits on, the second switches them back off.
    """
    cycle = shortest_cycle(g)
    if cycle is None:
        raise DomainError("base graph is acyclic")
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    m = len(edges)
    k = len(cycle)
    bits = [1 << index[tuple(sorted((cycle[i], cycle[(i + 1) % k])))] for i in range(k)]
    label = 0
    out = []
    for step in range(2 * k):
        out.append(LiftVertex(cycle[step % k], label, m).id)
        label ^= bits[step % k]
    return out


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_lifted_complete(d: int, lifts: int, max_vertices: int = MAX_LIFT_VERTICES) -> Graph:
    if d < 2:
        raise DomainError("degree must be at least 2")
    if lifts < 0:
        raise DomainError("lift count must be non-negative")
    g = complete_graph(d + 1)
    for _ in range(lifts):
        g = lift(g, max_vertices)
    return g


def gen_random_regular(
    n: int, d: int, min_girth: int, seed: int, max_attempts: int = DEFAULT_ATTEMPTS
) -> Graph:
    """Random simple ``d``-regular graph on ``n`` vertices with girth >= ``min_girth``.

    Stubs are paired one at a time; a pair is rejected when it would close a
    loop, a multi-edge or a cycle shorter than ``min_girth``. A dead end
    discards the whole graph and starts over with the continuing PRNG stream.
    """
    if (n * d) % 2:
        raise DomainError(f"n*d must be even (n={n}, d={d})")
    if not 0 <= d < n:
        raise DomainError(f"need 0 <= d < n (n={n}, d={d})")
    if d == 0:
        return Graph.from_edges(n, [])
    edges, attempts = _kernels.random_regular(n, d, min_girth, seed, max_attempts)
    if edges is None:
        raise GenerationFailedError(
            f"no {d}-regular graph on {n} vertices with girth >= {min_girth} after "
            f"{attempts} attempts; try a larger n or a smaller min_girth"
        )
    g = Graph.from_edges(n, edges)
    assert regular_degree(g) == d
    assert girth_exceeds(g, min_girth - 1)
    return g


def _parse_fixture_header(text: str) -> tuple[int, int]:
    m = re.match(r"#\s*\w+:\s*(\d+)-regular, girth (\d+)", text)
    if m is None:
        raise ValueError("fixture file lacks its degree/girth header")
    return int(m.group(1)), int(m.group(2))


def named_graph(name: str) -> Graph:
    key = name.strip().lower()
    if key in FIXTURES:
        text = resources.files("treecount.data").joinpath(f"{key}.txt").read_text()
        degree, expected_girth = _parse_fixture_header(text)
        g = load_graph(text)
        if regular_degree(g) != degree or girth(g, cutoff=expected_girth) != expected_girth:
            raise AssertionError(f"fixture {key} does not match its header")
        return g
    m = re.fullmatch(r"k_?(\d+)", key)
    if m:
        return complete_graph(int(m.group(1)))
    m = re.fullmatch(r"path_?(\d+)", key)
    if m:
        k = int(m.group(1))
        return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
    m = re.fullmatch(r"cycle_?(\d+)", key)
    if m:
        k = int(m.group(1))
        if k < 3:
            raise DomainError("cycle needs at least 3 vertices")
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
    raise DomainError(f"unknown graph name {name!r}")


def generate(spec: GenSpec) -> Graph:
    if spec.kind == "lifted-complete":
        return gen_lifted_complete(spec.degree, spec.lifts)
    if spec.kind == "random-regular":
        return gen_random_regular(spec.n, spec.degree, spec.min_girth, spec.seed)
    if spec.kind == "named":
        return named_graph(spec.name)
    raise DomainError(f"unknown generator kind {spec.kind!r}")
