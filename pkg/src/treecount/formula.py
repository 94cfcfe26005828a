"""Quantifier-free formulas over the distance atoms ``D_k(x, a_i)``.

Grammar (whitespace insignificant)::

    formula := disj
    disj    := conj ('|' conj)*
    conj    := lit ('&' lit)*
    lit     := '!'? (atom | '(' formula ')')
    atom    := 'D' INT '(' 'x' ',' 'a' INT ')'

``D_k(x, a)`` holds when ``dist(x, a) == k``; equality is ``D0``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

from .errors import FormulaSyntaxError


@dataclass(frozen=True, order=True)
class Atom:
    k: int
    param: int

    def __post_init__(self):
        if self.k < 0 or self.param < 1:
            raise ValueError(f"invalid atom D{self.k}(x,a{self.param})")


@dataclass(frozen=True)
class Not:
    arg: Formula


@dataclass(frozen=True)
class And:
    args: tuple[Formula, ...]


@dataclass(frozen=True)
class Or:
    args: tuple[Formula, ...]


Formula = Atom | Not | And | Or


# -- lexing / parsing ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>[0-9]+)|(?P<sym>[Dxa(),!&|]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                rest = text[pos:]
                stripped = rest.lstrip()
                if not stripped:
                    break
                bad = pos + len(rest) - len(stripped)
                self._fail(f"unexpected character {stripped[0]!r}", bad)
            kind = "int" if m.group("int") else m.group("sym")
            self.tokens.append((kind, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0

    def _fail(self, message: str, offset: int):
        line = self.text.count("\n", 0, offset) + 1
        col = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        raise FormulaSyntaxError(message, line, col)

    def _peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _offset(self):
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def _expect(self, kind: str, what: str | None = None) -> str:
        if self._peek() != kind:
            got = "end of input" if self._peek() is None else repr(self.tokens[self.i][1])
            self._fail(f"expected {what or repr(kind)}, got {got}", self._offset())
        value = self.tokens[self.i][1]
        self.i += 1
        return value

    def parse(self) -> Formula:
        f = self.disj()
        if self._peek() is not None:
            self._fail(f"unexpected {self.tokens[self.i][1]!r}", self._offset())
        return f

    def disj(self) -> Formula:
        args = [self.conj()]
        while self._peek() == "|":
            self.i += 1
            args.append(self.conj())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def conj(self) -> Formula:
        args = [self.lit()]
        while self._peek() == "&":
            self.i += 1
            args.append(self.lit())
        return args[0] if len(args) == 1 else And(tuple(args))

    def lit(self) -> Formula:
        if self._peek() == "!":
            self.i += 1
            return Not(self.primary())
        return self.primary()

    def primary(self) -> Formula:
        if self._peek() == "(":
            self.i += 1
            f = self.disj()
            self._expect(")")
            return f
        if self._peek() == "D":
            return self.atom()
        got = "end of input" if self._peek() is None else repr(self.tokens[self.i][1])
        self._fail(f"expected an atom or '(', got {got}", self._offset())

    def atom(self) -> Atom:
        self._expect("D")
        if self._peek() != "int":
            self._fail("distance constant must be a non-negative integer", self._offset())
        k = int(self._expect("int"))
        self._expect("(")
        self._expect("x", "object variable 'x'")
        self._expect(",")
        self._expect("a", "parameter 'a<i>'")
        if self._peek() != "int":
            self._fail("parameter index must be a positive integer", self._offset())
        at = self._offset()
        param = int(self._expect("int"))
        if param < 1:
            self._fail("parameter index must be at least 1", at)
        self._expect(")")
        return Atom(k, param)


def parse(text: str) -> Formula:
    return _Parser(text).parse()


def render(f: Formula) -> str:
    if isinstance(f, Atom):
        return f"D{f.k}(x,a{f.param})"
    if isinstance(f, Not):
        inner = render(f.arg)
        return "!" + (inner if isinstance(f.arg, Atom) else f"({inner})")
    if isinstance(f, And):
        parts = [render(a) if isinstance(a, (Atom, Not)) else f"({render(a)})" for a in f.args]
        return " & ".join(parts)
    parts = [f"({render(a)})" if isinstance(a, Or) else render(a) for a in f.args]
    return " | ".join(parts)


# -- structural queries --------------------------------------------------------


def atoms(f: Formula) -> list[Atom]:
    """Atom occurrences, left to right (with repetition)."""
    if isinstance(f, Atom):
        return [f]
    if isinstance(f, Not):
        return atoms(f.arg)
    return [a for arg in f.args for a in atoms(arg)]


def params(f: Formula) -> list[int]:
    return sorted({a.param for a in atoms(f)})


def interaction_radius(f: Formula) -> int:
    return sum(a.k + 1 for a in atoms(f))


def evaluate(f: Formula, dists: dict[int, np.ndarray]) -> np.ndarray:
    """Vectorised truth value; ``dists[i]`` holds dist(x, a_i) per vertex x."""
    if isinstance(f, Atom):
        return dists[f.param] == f.k
    if isinstance(f, Not):
        return ~evaluate(f.arg, dists)
    parts = [evaluate(a, dists) for a in f.args]
    out = parts[0].copy()
    for p in parts[1:]:
        if isinstance(f, And):
            out &= p
        else:
            out |= p
    return out


# -- normal forms --------------------------------------------------------------


@dataclass(frozen=True)
class LiteralConjunction:
    positives: frozenset[Atom]
    negatives: frozenset[Atom] = frozenset()

    @property
    def consistent(self) -> bool:
        if self.positives & self.negatives:
            return False
        seen: dict[int, int] = {}
        for a in self.positives:
            if seen.setdefault(a.param, a.k) != a.k:
                return False
        return True

    def merge(self, other: LiteralConjunction) -> LiteralConjunction:
        return LiteralConjunction(self.positives | other.positives, self.negatives | other.negatives)

    def params(self) -> set[int]:
        return {a.param for a in self.positives | self.negatives}

    def to_formula(self) -> Formula:
        lits = [a for a in sorted(self.positives)] + [Not(a) for a in sorted(self.negatives)]
        return lits[0] if len(lits) == 1 else And(tuple(lits))


@dataclass(frozen=True)
class Dnf:
    disjuncts: tuple[LiteralConjunction, ...]

    def params(self) -> list[int]:
        return sorted(set().union(*(c.params() for c in self.disjuncts)))

    def to_formula(self) -> Formula:
        """Back to an AST; the empty disjunction becomes ``D0 & !D0``."""
        if not self.disjuncts:
            a = Atom(0, 1)
            return And((a, Not(a)))
        parts = [c.to_formula() for c in self.disjuncts]
        return parts[0] if len(parts) == 1 else Or(tuple(parts))


def _nnf_dnf(f: Formula, negated: bool) -> list[LiteralConjunction]:
    if isinstance(f, Atom):
        lit = frozenset([f])
        return [LiteralConjunction(frozenset(), lit) if negated else LiteralConjunction(lit)]
    if isinstance(f, Not):
        return _nnf_dnf(f.arg, not negated)
    # De Morgan: a negated And is an Or of negations and vice versa
    is_or = isinstance(f, Or) != negated
    branches = [_nnf_dnf(a, negated) for a in f.args]
    if is_or:
        return [c for b in branches for c in b]
    out = []
    for combo in itertools.product(*branches):
        merged = combo[0]
        for c in combo[1:]:
            merged = merged.merge(c)
        if merged.consistent:
            out.append(merged)
    return out


def to_dnf(f: Formula) -> Dnf:
    seen = set()
    out = []
    for c in _nnf_dnf(f, False):
        if c.consistent and c not in seen:
            seen.add(c)
            out.append(c)
    return Dnf(tuple(out))
