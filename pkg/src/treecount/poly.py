"""Sparse integer polynomials in ``t1`` (universe size) and ``t2`` (degree)."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, InputFormatError

Monomial = tuple[int, int]


@dataclass(frozen=True)
class Poly2:
    terms: tuple[tuple[Monomial, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: dict[Monomial, int]) -> Poly2:
        items = sorted(((m, c) for m, c in coeffs.items() if c), reverse=True)
        return cls(tuple(items))

    @classmethod
    def const(cls, c: int) -> Poly2:
        return cls.from_dict({(0, 0): c})

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Poly2 | int) -> Poly2:
        other = _lift(other)
        out = self.as_dict()
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return Poly2.from_dict(out)

    __radd__ = __add__

    def __neg__(self) -> Poly2:
        return Poly2(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: Poly2 | int) -> Poly2:
        return self + -_lift(other)

    def __rsub__(self, other: int) -> Poly2:
        return _lift(other) - self

    def __mul__(self, other: Poly2 | int) -> Poly2:
        other = _lift(other)
        out: dict[Monomial, int] = {}
        for (i, j), c in self.terms:
            for (k, l), e in other.terms:
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + c * e
        return Poly2.from_dict(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly2:
        if e < 0:
            raise DomainError("negative exponent")
        out, base = Poly2.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def eval(self, alpha: int, beta: int) -> int:
        return sum(c * alpha**i * beta**j for (i, j), c in self.terms)

    def leading(self) -> Monomial:
        """Exponent pair of the lexicographically largest monomial (t1 first)."""
        if not self.terms:
            raise DomainError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    def __str__(self) -> str:
        return render_poly(self)


def _lift(x: Poly2 | int) -> Poly2:
    return x if isinstance(x, Poly2) else Poly2.const(int(x))


T1 = Poly2.from_dict({(1, 0): 1})
T2 = Poly2.from_dict({(0, 1): 1})
ZERO = Poly2()
ONE = Poly2.const(1)


def _monomial_text(i: int, j: int) -> str:
    parts = []
    for name, e in (("t1", i), ("t2", j)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(p: Poly2) -> str:
    if not p.terms:
        return "0"
    out = []
    for idx, ((i, j), c) in enumerate(p.terms):
        mono = _monomial_text(i, j)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"(?:(\d+)|(t[12])(?:\^(\d+))?)$")


def parse_poly(text: str) -> Poly2:
    """Parse sums of ``c*t1^i*t2^j``-style terms (any factor order)."""
    src = text.strip()
    if not src:
        raise InputFormatError("empty polynomial")
    out: dict[Monomial, int] = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if m is None or (m.group(1) is None and not first):
            raise InputFormatError(f"cannot parse polynomial near {src[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff, i, j = sign, 0, 0
        for factor in m.group(2).split("*"):
            f = _FACTOR.match(factor.strip())
            if f is None:
                raise InputFormatError(f"bad factor {factor.strip()!r} in polynomial")
            if f.group(1):
                coeff *= int(f.group(1))
            else:
                e = int(f.group(3)) if f.group(3) else 1
                if f.group(2) == "t1":
                    i += e
                else:
                    j += e
        out[(i, j)] = out.get((i, j), 0) + coeff
        pos = m.end()
        first = False
    return Poly2.from_dict(out)
