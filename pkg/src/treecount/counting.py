"""Counting polynomials for formulas in one object variable.

Parameter ``a_i`` of a formula corresponds to index ``i - 1`` of the
distance configuration. Every count is a :class:`Poly2` in ``t1`` (size of
the universe) and ``t2`` (the common vertex degree).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .distance_algebra import FAR, DistanceConfig, solve_center
from .errors import ComplexityError, DomainError
from .formula import Atom, Dnf, Formula, LiteralConjunction, atoms, parse, render, to_dnf
from .poly import ONE, T1, T2, ZERO, Poly2

MAX_DISJUNCTS = 20
MAX_PARTITION_PARAMS = 4
MAX_PARTITION_CONSTANT = 8
MAX_PARTITION_CLASSES = 200_000


def count_positive(cfg: DistanceConfig, ks) -> Poly2:
    """Size of ``{x : dist(x, a_i) = ks[i] for all i}``."""
    res = solve_center(cfg, ks)
    if not res.nonempty:
        return ZERO
    if res.level == 0:
        return ONE
    return (T2 - res.hull_degree) * (T2 - 1) ** (res.level - 1)


def _positive_atoms(cfg: DistanceConfig, lits) -> Poly2:
    ks: dict[int, int] = {}
    for a in lits:
        if ks.setdefault(a.param - 1, a.k) != a.k:
            return ZERO
    idx = sorted(ks)
    return _count_positive_cached(cfg.restrict(idx), tuple(ks[i] for i in idx))


@lru_cache(maxsize=1 << 16)
def _count_positive_cached(cfg: DistanceConfig, ks: tuple[int, ...]) -> Poly2:
    return count_positive(cfg, ks)


def _check_covers(cfg: DistanceConfig, params) -> None:
    if params and max(params) > cfg.n:
        raise DomainError(f"configuration has {cfg.n} parameters but a{max(params)} is used")


def count_conjunction(cfg: DistanceConfig, conj: LiteralConjunction) -> Poly2:
    _check_covers(cfg, conj.params())
    return _count_conjunction(cfg, conj)


def _count_conjunction(cfg: DistanceConfig, conj: LiteralConjunction) -> Poly2:
    if not conj.consistent:
        return ZERO
    negs = sorted(conj.negatives)
    total = ZERO
    for r in range(len(negs) + 1):
        for subset in itertools.combinations(negs, r):
            lits = conj.positives | frozenset(subset)
            term = _positive_atoms(cfg, lits) if lits else T1
            total = total + term if r % 2 == 0 else total - term
    return total


def count_formula(cfg: DistanceConfig, dnf: Dnf | Formula) -> Poly2:
    if not isinstance(dnf, Dnf):
        dnf = to_dnf(dnf)
    if len(dnf.disjuncts) > MAX_DISJUNCTS:
        raise ComplexityError(
            f"{len(dnf.disjuncts)} disjuncts exceed the inclusion-exclusion limit of {MAX_DISJUNCTS}"
        )
    _check_covers(cfg, dnf.params())
    return _count_formula(cfg, dnf)


@lru_cache(maxsize=1 << 14)
def _count_formula(cfg: DistanceConfig, dnf: Dnf) -> Poly2:
    parts = dnf.disjuncts
    total = ZERO
    for r in range(1, len(parts) + 1):
        for subset in itertools.combinations(parts, r):
            merged = subset[0]
            for c in subset[1:]:
                merged = merged.merge(c)
            term = _count_conjunction(cfg, merged)
            total = total + term if r % 2 else total - term
    return total


# -- partitions over configurations ---------------------------------------------

ABOVE = None  # pair value "> B" in a class pattern

Pattern = tuple[int | None, ...]


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def render_pattern(n: int, pattern: Pattern, bound: int) -> str:
    if n < 2:
        return "-"
    return " ".join(
        f"d{i + 1}{j + 1}={'>' + str(bound) if v is ABOVE else v}" for (i, j), v in zip(_pairs(n), pattern)
    )


def _witness(n: int, pattern: Pattern, bound: int) -> DistanceConfig | None:
    """A realizable configuration in the class, or None if there is none.

    Pairs not joined by a chain of ``<= bound`` pairs are placed in separate
    trees; within a chain-connected group each ``> bound`` pair is tried at
    the finite values the triangle inequality leaves open.
    """
    pairs = _pairs(n)
    values = dict(zip(pairs, pattern))
    comp = list(range(n))

    def find(x):
        while comp[x] != x:
            x = comp[x]
        return x

    for (i, j), v in values.items():
        if v is not ABOVE:
            comp[find(i)] = find(j)
    unknown = [p for p in pairs if values[p] is ABOVE and find(p[0]) == find(p[1])]
    base = {p: (FAR if values[p] is ABOVE else values[p]) for p in pairs}
    ceiling = max(1, n - 1) * bound
    for choice in itertools.product(range(bound + 1, ceiling + 1), repeat=len(unknown)):
        trial = dict(base)
        trial.update(zip(unknown, choice))
        cfg = DistanceConfig.from_pairs(n, trial)
        if cfg.is_realizable():
            return cfg
    return None


def pattern_of(cfg: DistanceConfig, bound: int) -> Pattern:
    return tuple(ABOVE if cfg.d[i][j] > bound else int(cfg.d[i][j]) for i, j in _pairs(cfg.n))


@dataclass(frozen=True)
class PartitionTable:
    schema: Formula
    n: int
    bound: int
    rows: tuple[tuple[Pattern, Poly2], ...]

    def lookup(self, cfg: DistanceConfig) -> Poly2:
        """Polynomial of the class containing ``cfg`` (KeyError if unrealizable)."""
        if cfg.n != self.n:
            raise DomainError(f"expected a {self.n}-parameter configuration")
        return self.index[pattern_of(cfg, self.bound)]

    @cached_property
    def index(self) -> dict[Pattern, Poly2]:
        return dict(self.rows)

    def groups(self) -> list[tuple[Poly2, list[Pattern]]]:
        out: dict[Poly2, list[Pattern]] = {}
        for pattern, p in self.rows:
            out.setdefault(p, []).append(pattern)
        return list(out.items())

    def render(self) -> str:
        lines = [f"{render_pattern(self.n, pat, self.bound)}\t{p}" for pat, p in self.rows]
        return "\n".join(lines) + "\n"


def schema_bound(schema: Formula, n: int) -> int:
    top = [0] * n
    for a in atoms(schema):
        top[a.param - 1] = max(top[a.param - 1], a.k)
    return max((top[i] + top[j] for i, j in _pairs(n)), default=0)


def partition_table(schema: Formula | str) -> PartitionTable:
    """Configuration classes of the schema's parameters with their polynomials.

    Pair distances above ``B = max (c_i + c_j)`` are lumped together: any
    positive system containing such a pair has negative level, so every
    configuration in the lumped class gets the same polynomial.
    """
    if isinstance(schema, str):
        schema = parse(schema)
    all_atoms: list[Atom] = atoms(schema)
    n = max(a.param for a in all_atoms)
    if n > MAX_PARTITION_PARAMS:
        raise ComplexityError(f"partition tables support at most {MAX_PARTITION_PARAMS} parameters")
    if max(a.k for a in all_atoms) > MAX_PARTITION_CONSTANT:
        raise ComplexityError(f"partition tables support constants up to {MAX_PARTITION_CONSTANT}")
    bound = schema_bound(schema, n)
    pairs = _pairs(n)
    if (bound + 2) ** len(pairs) > MAX_PARTITION_CLASSES:
        raise ComplexityError(f"{(bound + 2) ** len(pairs)} candidate classes for {render(schema)}")
    dnf = to_dnf(schema)
    rows = []
    for pattern in itertools.product([*range(bound + 1), ABOVE], repeat=len(pairs)):
        cfg = _witness(n, pattern, bound)
        if cfg is not None:
            rows.append((pattern, count_formula(cfg, dnf)))
    return PartitionTable(schema, n, bound, tuple(rows))
