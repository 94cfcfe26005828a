"""Distance configurations, their tree realizations, and system centers.

A system ``dist(x, a_i) = k_i`` over parameters with known pairwise
distances ``d_ij`` is solved in the tree spanned by the parameters: the
solutions (if any) all project onto one hull point ``c`` at distance
``level = min_ij (k_i + k_j - d_ij) / 2`` from every solution.

Parameter indices are 0-based throughout the API; the text format and
messages use 1-based ``a1, a2, ...``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InputFormatError, NotATreeMetricError
from .graph import Graph, distances_from

FAR = math.inf
UNDEF = None

Dist = int | float


@dataclass(frozen=True)
class DistanceConfig:
    n: int
    d: tuple[tuple[Dist, ...], ...]

    def __post_init__(self):
        d = tuple(tuple(FAR if v == FAR else int(v) for v in row) for row in self.d)
        object.__setattr__(self, "d", d)
        if len(d) != self.n or any(len(row) != self.n for row in d):
            raise DomainError(f"distance matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if d[i][i] != 0:
                raise DomainError(f"d[{i + 1}][{i + 1}] must be 0")
            for j in range(self.n):
                if d[i][j] != d[j][i]:
                    raise DomainError(f"asymmetric entry at ({i + 1},{j + 1})")
                if d[i][j] < 0:
                    raise DomainError(f"negative distance at ({i + 1},{j + 1})")
        for i, j, k in itertools.permutations(range(self.n), 3):
            if d[i][j] != FAR and d[j][k] != FAR and d[i][k] == FAR:
                raise DomainError(
                    f"a{i + 1}, a{k + 1} are both finitely close to a{j + 1} but far from each other"
                )

    @classmethod
    def from_pairs(cls, n: int, pairs: dict[tuple[int, int], Dist]) -> DistanceConfig:
        """Build from ``{(i, j): d}`` with 0-based ``i < j``; missing pairs are FAR."""
        d = [[0 if i == j else FAR for j in range(n)] for i in range(n)]
        for (i, j), v in pairs.items():
            d[i][j] = d[j][i] = v
        return cls(n, tuple(map(tuple, d)))

    def restrict(self, indices) -> DistanceConfig:
        idx = list(indices)
        return DistanceConfig(len(idx), tuple(tuple(self.d[i][j] for j in idx) for i in idx))

    def finite_classes(self) -> list[list[int]]:
        out: list[list[int]] = []
        seen: set[int] = set()
        for i in range(self.n):
            if i not in seen:
                cls_ = [j for j in range(self.n) if self.d[i][j] != FAR]
                seen.update(cls_)
                out.append(cls_)
        return out

    def all_finite(self) -> bool:
        return all(v != FAR for row in self.d for v in row)

    def tree_violation(self) -> tuple[int, ...] | None:
        """A triple or quadruple witnessing non-realizability, or None.

        Checked within each finite class: triangle inequality, even
        perimeter of every triple (tree distances are path lengths of a
        bipartite graph), and the four-point condition.
        """
        d = self.d
        for cls_ in self.finite_classes():
            for i, j, k in itertools.combinations(cls_, 3):
                a, b, c = d[i][j], d[i][k], d[j][k]
                if a > b + c or b > a + c or c > a + b or (a + b + c) % 2:
                    return (i, j, k)
            for i, j, k, m in itertools.combinations(cls_, 4):
                s = sorted([d[i][j] + d[k][m], d[i][k] + d[j][m], d[i][m] + d[j][k]])
                if s[1] != s[2]:
                    return (i, j, k, m)
        return None

    def is_realizable(self) -> bool:
        return self.tree_violation() is None


def parse_config(text: str) -> DistanceConfig:
    n = None
    pairs: dict[tuple[int, int], Dist] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise InputFormatError(f"expected parameter count, got {line!r}", lineno)
            n = int(parts[0])
            continue
        if len(parts) != 3 or not parts[0].isdigit() or not parts[1].isdigit():
            raise InputFormatError(f"expected 'i j d', got {line!r}", lineno)
        i, j = int(parts[0]), int(parts[1])
        if not (1 <= i < j <= n):
            raise InputFormatError(f"need 1 <= i < j <= {n}, got {i} {j}", lineno)
        if parts[2].lower() == "far":
            value: Dist = FAR
        elif parts[2].isdigit():
            value = int(parts[2])
        else:
            raise InputFormatError(f"distance must be a non-negative integer or 'far': {parts[2]!r}", lineno)
        if (i - 1, j - 1) in pairs:
            raise InputFormatError(f"pair {i} {j} listed twice", lineno)
        pairs[(i - 1, j - 1)] = value
    if n is None:
        raise InputFormatError("missing parameter count line")
    try:
        return DistanceConfig.from_pairs(n, pairs)
    except DomainError as exc:
        raise InputFormatError(str(exc)) from None


def render_config(cfg: DistanceConfig) -> str:
    lines = [str(cfg.n)]
    for i, j in itertools.combinations(range(cfg.n), 2):
        v = cfg.d[i][j]
        lines.append(f"{i + 1} {j + 1} {'far' if v == FAR else v}")
    return "\n".join(lines) + "\n"


def config_from_graph(g: Graph, params) -> DistanceConfig:
    params = [int(p) for p in params]
    rows = []
    for p in params:
        dist = distances_from(g, p)
        rows.append(tuple(FAR if dist[q] < 0 else int(dist[q]) for q in params))
    return DistanceConfig(len(params), tuple(rows))


def ell_values(cfg: DistanceConfig, ks) -> list[list[Fraction | None]]:
    ks = list(ks)
    if len(ks) != cfg.n:
        raise DomainError(f"expected {cfg.n} constants, got {len(ks)}")
    return [
        [UNDEF if cfg.d[i][j] == FAR else Fraction(ks[i] + ks[j] - cfg.d[i][j], 2) for j in range(cfg.n)]
        for i in range(cfg.n)
    ]


# -- hull trees ----------------------------------------------------------------


@dataclass
class HullTree:
    """Minimal tree realization of one finite class.

    ``adj[u][v]`` is the integer length of edge ``uv``; ``labels`` maps a
    parameter index to its node (several parameters may share a node).
    """

    adj: list[dict[int, int]] = field(default_factory=list)
    labels: dict[int, int] = field(default_factory=dict)

    def add_node(self) -> int:
        self.adj.append({})
        return len(self.adj) - 1

    def link(self, u: int, v: int, length: int) -> None:
        self.adj[u][v] = length
        self.adj[v][u] = length

    def unlink(self, u: int, v: int) -> None:
        del self.adj[u][v]
        del self.adj[v][u]

    @property
    def num_nodes(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, w) for u in range(len(self.adj)) for v, w in self.adj[u].items() if u < v]

    def node_distances(self, source: int) -> list[int]:
        out = [-1] * len(self.adj)
        out[source] = 0
        stack = [source]
        while stack:
            u = stack.pop()
            for v, w in self.adj[u].items():
                if out[v] < 0:
                    out[v] = out[u] + w
                    stack.append(v)
        return out

    def path(self, u: int, v: int) -> list[int]:
        parent = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        out = [v]
        while out[-1] != u:
            out.append(parent[out[-1]])
        return out[::-1]

    def point_on_path(self, u: int, v: int, offset: int) -> int:
        """Node at ``offset`` from ``u`` towards ``v``, splitting an edge if needed."""
        nodes = self.path(u, v)
        pos = 0
        for a, b in zip(nodes, nodes[1:]):
            if pos == offset:
                return a
            w = self.adj[a][b]
            if pos < offset < pos + w:
                mid = self.add_node()
                self.unlink(a, b)
                self.link(a, mid, offset - pos)
                self.link(mid, b, pos + w - offset)
                return mid
            pos += w
        return nodes[-1]

    def label_distances(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, u in self.labels.items():
            du = self.node_distances(u)
            for j, v in self.labels.items():
                out[(i, j)] = du[v]
        return out

    def to_config(self) -> DistanceConfig:
        idx = sorted(self.labels)
        ld = self.label_distances()
        return DistanceConfig(len(idx), tuple(tuple(ld[(i, j)] for j in idx) for i in idx))


def _build_tree(d, members: list[int]) -> HullTree:
    tree = HullTree()
    first = members[0]
    tree.labels[first] = tree.add_node()
    placed = [first]
    for k in members[1:]:
        # Gromov products relative to the first label locate the branch point.
        best_j, best_g = first, 0
        for j in placed:
            g = d[first][j] + d[first][k] - d[j][k]
            if g > best_g:
                best_j, best_g = j, g
        # Parity was checked beforehand, so best_g is even.
        at = tree.point_on_path(tree.labels[first], tree.labels[best_j], best_g // 2)
        branch = d[first][k] - best_g // 2
        if branch == 0:
            tree.labels[k] = at
        else:
            leaf = tree.add_node()
            tree.link(at, leaf, branch)
            tree.labels[k] = leaf
        placed.append(k)
    return tree


def realize_hull(cfg: DistanceConfig) -> list[HullTree]:
    """One tree per finite class, labels indexed as in ``cfg``."""
    witness = cfg.tree_violation()
    if witness is not None:
        names = ", ".join(f"a{i + 1}" for i in witness)
        kind = "triangle/parity" if len(witness) == 3 else "four-point"
        raise NotATreeMetricError(f"not a tree metric ({kind} condition fails on {names})", witness)
    trees = []
    for members in cfg.finite_classes():
        tree = _build_tree(cfg.d, members)
        ld = tree.label_distances()
        assert all(ld[(i, j)] == cfg.d[i][j] for i in members for j in members)
        trees.append(tree)
    return trees


# -- solving systems -------------------------------------------------------------


class Status(enum.Enum):
    EMPTY = "EMPTY"
    NONEMPTY = "NONEMPTY"


@dataclass(frozen=True)
class Locus:
    """A hull point: node ``u`` (``v`` is None) or ``offset`` along edge ``u -> v``."""

    u: int
    v: int | None = None
    offset: int = 0


@dataclass(frozen=True)
class CenterResult:
    status: Status
    level: int | None = None
    hull_degree: int | None = None
    locus: Locus | None = None

    @property
    def nonempty(self) -> bool:
        return self.status is Status.NONEMPTY


EMPTY = CenterResult(Status.EMPTY)


def _merge_coincident(cfg: DistanceConfig, ks: list[int]) -> tuple[list[int], bool]:
    """Representatives of the ``d == 0`` groups; False if a group disagrees on k."""
    reps: list[int] = []
    for i in range(cfg.n):
        rep = next((r for r in reps if cfg.d[r][i] == 0), None)
        if rep is None:
            reps.append(i)
        elif ks[rep] != ks[i]:
            return reps, False
    return reps, True


def solve_center(cfg: DistanceConfig, ks) -> CenterResult:
    ks = [int(k) for k in ks]
    if len(ks) != cfg.n:
        raise DomainError(f"expected {cfg.n} constants, got {len(ks)}")
    if cfg.n == 0:
        raise DomainError("a system needs at least one parameter")
    if any(k < 0 for k in ks):
        raise DomainError("distance constants must be non-negative")
    return _solve_center(cfg, tuple(ks))


@lru_cache(maxsize=1 << 16)
def _solve_center(cfg: DistanceConfig, ks: tuple[int, ...]) -> CenterResult:
    if not cfg.all_finite():
        return EMPTY
    reps, ok = _merge_coincident(cfg, list(ks))
    if not ok:
        return EMPTY
    if len(reps) == 1:
        k = ks[reps[0]]
        return CenterResult(Status.NONEMPTY, k, 0, Locus(0))
    sub = cfg.restrict(reps)
    kr = [ks[r] for r in reps]
    doubled = [kr[i] + kr[j] - sub.d[i][j] for i, j in itertools.combinations(range(len(reps)), 2)]
    if any(v < 0 or v % 2 for v in doubled):
        return EMPTY
    level = min(doubled) // 2
    (tree,) = realize_hull(sub)
    from_label = {i: tree.node_distances(tree.labels[i]) for i in range(len(reps))}
    want = [k - level for k in kr]

    found: list[tuple[Locus, int]] = []
    for u in range(tree.num_nodes):
        if all(from_label[i][u] == want[i] for i in range(len(reps))):
            found.append((Locus(u), len(tree.adj[u])))
    for u, v, w in tree.edges():
        for t in range(1, w):
            if all(
                min(t + from_label[i][u], w - t + from_label[i][v]) == want[i] for i in range(len(reps))
            ):
                found.append((Locus(u, v, t), 2))
    if not found:
        return EMPTY
    assert len(found) == 1, "tree center must be unique"
    locus, degree = found[0]
    return CenterResult(Status.NONEMPTY, level, degree, locus)


def check_paper_conditions(cfg: DistanceConfig, ks) -> bool:
    """Closed-form nonemptiness test for distinct, pairwise-finite parameters.

    Requires every ``l_ij`` to be a non-negative integer, the bound
    ``k_i <= k_j + d_ij`` for all ordered pairs, and the two-case branch
    condition relative to some pair ``(p, q)`` attaining the minimal
    ``l_ij``.
    """
    ks = list(ks)
    n = cfg.n
    if len(ks) != n:
        raise DomainError(f"expected {n} constants, got {len(ks)}")
    d = cfg.d
    if not cfg.all_finite():
        raise DomainError("all parameter pairs must be at finite distance")
    if any(d[i][j] == 0 for i, j in itertools.combinations(range(n), 2)):
        raise DomainError("parameters must be distinct")
    if n == 1:
        return True
    doubled = {(i, j): ks[i] + ks[j] - d[i][j] for i, j in itertools.combinations(range(n), 2)}
    if any(v < 0 or v % 2 for v in doubled.values()):
        return False
    if any(ks[i] > ks[j] + d[i][j] for i in range(n) for j in range(n)):
        return False
    low = min(doubled.values())
    for (p, q), v in doubled.items():
        if v != low:
            continue
        for a, b in ((p, q), (q, p)):
            if all(_branch_ok(d, ks, a, b, i) for i in range(n)):
                return True
    return False


def _branch_ok(d, ks, p: int, q: int, i: int) -> bool:
    case_a = d[p][i] + ks[q] < ks[p] + d[q][i] and ks[i] + d[p][q] == ks[p] + d[q][i]
    case_b = d[p][i] + ks[q] >= ks[p] + d[q][i] and ks[i] + d[p][q] == ks[q] + d[p][i]
    return case_a != case_b
