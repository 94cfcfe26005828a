"""Ground truth by direct enumeration on concrete graphs.

:func:`brute_count` evaluates a formula at every vertex; :func:`verify`
compares those counts with the symbolic polynomials over sampled or
exhaustive parameter tuples, provided the graph is :func:`admissible`.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .counting import count_formula
from .distance_algebra import FAR, DistanceConfig, realize_hull
from .errors import DomainError
from .formula import Formula, atoms, evaluate, interaction_radius, parse, render, to_dnf
from .graph import Graph, ball, distances_from, girth_exceeds, regular_degree
from .poly import Poly2


def _param_count(f: Formula) -> int:
    return max(a.param for a in atoms(f))


def _dist_arrays(g: Graph, f: Formula, params: dict[int, int]) -> dict[int, np.ndarray]:
    out = {}
    for p in sorted({a.param for a in atoms(f)}):
        if p not in params:
            raise DomainError(f"parameter a{p} is not assigned")
        out[p] = distances_from(g, params[p])
    return out


def brute_count(g: Graph, f: Formula | str, params: dict[int, int]) -> int:
    """Number of vertices ``x`` satisfying ``f(x, params)``."""
    if isinstance(f, str):
        f = parse(f)
    return int(np.count_nonzero(evaluate(f, _dist_arrays(g, f, params))))


def _holds(f: Formula, dist_to: dict[int, int]) -> bool:
    kind = type(f).__name__
    if kind == "Atom":
        return dist_to.get(f.param) == f.k
    if kind == "Not":
        return not _holds(f.arg, dist_to)
    if kind == "And":
        return all(_holds(a, dist_to) for a in f.args)
    return any(_holds(a, dist_to) for a in f.args)


def brute_count_naive(g: Graph, f: Formula | str, params: dict[int, int]) -> int:
    """Slow reference: a fresh BFS per vertex and a recursive truth check."""
    if isinstance(f, str):
        f = parse(f)
    wanted = {a.param for a in atoms(f)}
    missing = wanted - params.keys()
    if missing:
        raise DomainError(f"parameter a{min(missing)} is not assigned")
    adj = g.adjacency
    total = 0
    for x in range(g.n):
        seen = {x: 0}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen[w] = seen[u] + 1
                    queue.append(w)
        if _holds(f, {p: seen.get(params[p]) for p in wanted}):
            total += 1
    return total


def brute_count_pairs(g: Graph, outer: Formula, inner: Formula, params: dict[int, int]) -> int:
    """Number of pairs ``(x, y)`` with ``outer(x)`` and ``inner(y)``.

    In ``inner``, parameter ``a_{n+1}`` (``n`` = highest parameter assigned)
    stands for the outer vertex ``x``.
    """
    slot = max(params) + 1 if params else 1
    mask = evaluate(outer, _dist_arrays(g, outer, params))
    total = 0
    for x in np.flatnonzero(mask).tolist():
        total += brute_count(g, inner, {**params, slot: x})
    return total


def admissible(g: Graph, f: Formula | str) -> bool:
    """Regular with every cycle longer than twice the interaction radius."""
    if isinstance(f, str):
        f = parse(f)
    if regular_degree(g) is None:
        return False
    return girth_exceeds(g, 2 * interaction_radius(f))


# -- verification ------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    formula: str
    params: tuple[int, ...]
    brute: int
    poly: Poly2
    value: int


@dataclass(frozen=True)
class VerifyReport:
    n: int
    degree: int | None
    girth_bound: int
    formula: str
    mode: str
    seed: int
    attempted: int
    admissible: int
    passed: int
    counterexample: Counterexample | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.admissible

    def render(self) -> str:
        lines = [
            f"RESULT {'pass' if self.ok else 'fail'}",
            f"graph n={self.n} d={self.degree if self.degree is not None else 'irregular'} "
            f"girth>{self.girth_bound}",
            f"formula {self.formula}",
            f"mode {self.mode}",
            f"seed {self.seed}",
            f"attempted {self.attempted}",
            f"admissible {self.admissible}",
            f"passed {self.passed}",
        ]
        c = self.counterexample
        if c is not None:
            assignment = ",".join(f"a{i + 1}={v}" for i, v in enumerate(c.params))
            lines += [
                "COUNTEREXAMPLE",
                f"  formula {c.formula}",
                f"  params {assignment}",
                f"  brute {c.brute}",
                f"  polynomial {c.poly}",
                f"  evaluated {c.value}",
            ]
        return "\n".join(lines) + "\n"


def _tuples(g: Graph, n_params: int, trials: int, seed: int, mode: str, radius: int):
    if mode == "exhaustive":
        yield from itertools.product(range(g.n), repeat=n_params)
        return
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        if mode == "uniform":
            yield tuple(int(v) for v in rng.integers(0, g.n, size=n_params))
        else:
            verts, _ = ball(g, int(rng.integers(0, g.n)), radius)
            yield tuple(int(verts[i]) for i in rng.integers(0, len(verts), size=n_params))


def verify(
    g: Graph,
    schema: Formula | str,
    trials: int = 200,
    seed: int = 0,
    mode: str = "uniform",
) -> VerifyReport:
    """Compare brute counts with polynomial values over parameter tuples.

    ``mode`` is ``uniform`` (tuples drawn from V with replacement),
    ``local`` (drawn from one ball of radius equal to the interaction
    radius) or ``exhaustive`` (all of V^n; ``trials`` is ignored).
    """
    f = parse(schema) if isinstance(schema, str) else schema
    degree = regular_degree(g)
    if degree is None:
        raise DomainError("verification needs a regular graph")
    radius = interaction_radius(f)
    ok_graph = admissible(g, f)
    dnf = to_dnf(f)
    n_params = _param_count(f)
    text = render(f)
    attempted = passed = admitted = 0
    counterexample = None
    dist_cache: dict[int, np.ndarray] = {}
    if mode not in ("uniform", "local", "exhaustive"):
        raise DomainError(f"unknown sampling mode {mode!r}")
    if not ok_graph:
        # every tuple would be skipped; report the count without enumerating
        attempted = g.n**n_params if mode == "exhaustive" else trials
        return VerifyReport(g.n, degree, 2 * radius, text, mode, seed, attempted, 0, 0)
    for tup in _tuples(g, n_params, trials, seed, mode, radius):
        attempted += 1
        admitted += 1
        rows = []
        for v in tup:
            if v not in dist_cache:
                if len(dist_cache) > 4096:
                    dist_cache.clear()
                dist_cache[v] = distances_from(g, v)
            rows.append(dist_cache[v])
        dists = {i + 1: rows[i] for i in range(n_params)}
        brute = int(np.count_nonzero(evaluate(f, dists)))
        cfg = DistanceConfig(
            n_params,
            tuple(tuple(FAR if rows[i][w] < 0 else int(rows[i][w]) for w in tup) for i in range(n_params)),
        )
        poly = count_formula(cfg, dnf)
        value = poly.eval(g.n, degree)
        if value == brute:
            passed += 1
        elif counterexample is None:
            counterexample = Counterexample(text, tuple(tup), brute, poly, value)
    return VerifyReport(
        g.n, degree, 2 * radius, text, mode, seed, attempted, admitted, passed, counterexample
    )


# -- tree models -------------------------------------------------------------------


def tree_model(cfg: DistanceConfig, degree: int, radius: int) -> tuple[Graph, list[int]]:
    """Finite piece of the ``degree``-regular forest around a realized configuration.

    The hull of each finite class is laid out with unit edges and every
    vertex within ``radius`` of a hull is given its full ``degree``; systems
    with constants ``<= radius`` therefore have the same solutions here as
    in the infinite regular forest. Returns the graph and the parameter
    vertices (in configuration order).
    """
    edges: list[tuple[int, int]] = []
    params = [0] * cfg.n
    depth: list[int] = []

    def new_vertex(level: int) -> int:
        depth.append(level)
        return len(depth) - 1

    for tree in realize_hull(cfg):
        node_vertex = [new_vertex(0) for _ in range(tree.num_nodes)]
        for u, v, w in tree.edges():
            prev = node_vertex[u]
            for _ in range(w - 1):
                mid = new_vertex(0)
                edges.append((prev, mid))
                prev = mid
            edges.append((prev, node_vertex[v]))
        for label, node in tree.labels.items():
            params[label] = node_vertex[node]
    deg = [0] * len(depth)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if max(deg, default=0) > degree:
        raise DomainError(f"hull has a vertex of degree {max(deg)} > {degree}")
    frontier = list(range(len(depth)))
    while frontier:
        nxt = []
        for u in frontier:
            if depth[u] >= radius:
                continue
            while deg[u] < degree:
                w = new_vertex(depth[u] + 1)
                deg.append(1)
                deg[u] += 1
                edges.append((u, w))
                nxt.append(w)
        frontier = nxt
    return Graph.from_edges(len(depth), edges), params
