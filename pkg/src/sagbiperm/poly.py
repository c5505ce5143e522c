"""Sparse polynomials over the integers, orbit sums and elementary symmetric polynomials."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .permgroup import PermGroup, Permutation, act_on_exponents
from .termorder import TermOrder

Exponent = tuple[int, ...]


def exponent(u: Iterable[int]) -> Exponent:
    """Validate and normalise an exponent vector."""
    out = tuple(int(x) for x in u)
    if any(x < 0 for x in out):
        raise ValueError(f"negative exponent in {out}")
    return out


class SparsePolynomial:
    """Immutable map from exponent tuples to nonzero integer coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], int] | None = None):
        self.n = n
        clean: dict[Exponent, int] = {}
        for u, c in (terms or {}).items():
            u = exponent(u)
            if len(u) != n:
                raise ValueError(f"exponent {u} has length {len(u)}, expected {n}")
            c = clean.get(u, 0) + int(c)
            if c:
                clean[u] = c
            else:
                clean.pop(u, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, u: Sequence[int], coeff: int = 1) -> SparsePolynomial:
        return cls(len(u), {tuple(u): coeff})

    @classmethod
    def constant(cls, n: int, c: int) -> SparsePolynomial:
        return cls(n, {(0,) * n: c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: SparsePolynomial):
        if self.n != other.n:
            raise ValueError(f"ring mismatch: {self.n} != {other.n} variables")

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.n, other)
        self._check(other)
        terms = dict(self._terms)
        for u, c in other._terms.items():
            terms[u] = terms.get(u, 0) + c
        return SparsePolynomial(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.n, {u: -c for u, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePolynomial(self.n, {u: c * other for u, c in self._terms.items()})
        self._check(other)
        terms: dict[Exponent, int] = {}
        for (u, a), (v, b) in itertools.product(self._terms.items(), other._terms.items()):
            w = tuple(x + y for x, y in zip(u, v))
            terms[w] = terms.get(w, 0) + a * b
        return SparsePolynomial(self.n, terms)

    __rmul__ = __mul__

    def sorted_terms(self, order: TermOrder | None = None) -> list[tuple[Exponent, int]]:
        """Terms sorted descending, under ``order`` or plain lex when omitted."""
        if order is None:
            return sorted(self._terms.items(), reverse=True)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_text(self, order: TermOrder | None = None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for u, c in self.sorted_terms(order):
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(u, start=1) if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self, order: TermOrder | None = None) -> list[dict]:
        return [{"coeff": c, "exps": list(u)} for u, c in self.sorted_terms(order)]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> SparsePolynomial:
        return cls(n, {tuple(t["exps"]): t["coeff"] for t in data})

    def __repr__(self):
        return f"SparsePolynomial({self.to_text()!r})"


def orbit(group: PermGroup, u: Sequence[int]) -> set[Exponent]:
    if len(u) != group.n:
        raise ValueError(f"length mismatch: {len(u)} != {group.n}")
    return {act_on_exponents(g, u) for g in group.elements}


def orbit_sum(group: PermGroup, u: Sequence[int]) -> SparsePolynomial:
    """Sum of the distinct monomials in the G-orbit of x^u."""
    u = exponent(u)
    return SparsePolynomial(group.n, {v: 1 for v in orbit(group, u)})


def elementary_symmetric(S: Iterable[int], d: int, n: int) -> SparsePolynomial:
    """e_d in the variables indexed by the 1-based set ``S``."""
    points = sorted(set(S))
    if not points:
        raise ValueError("empty variable set")
    if any(p < 1 or p > n for p in points):
        raise ValueError(f"variable index out of range 1..{n}")
    if not 1 <= d <= len(points):
        raise ValueError(f"degree {d} out of range 1..{len(points)}")
    terms = {}
    for subset in itertools.combinations(points, d):
        u = [0] * n
        for p in subset:
            u[p - 1] = 1
        terms[tuple(u)] = 1
    return SparsePolynomial(n, terms)


def act(g: Permutation, p: SparsePolynomial) -> SparsePolynomial:
    if g.n != p.n:
        raise ValueError(f"degree mismatch: {g.n} != {p.n}")
    return SparsePolynomial(p.n, {act_on_exponents(g, u): c for u, c in p._terms.items()})


def is_invariant(group: PermGroup, p: SparsePolynomial) -> bool:
    """Invariance under the generators, which is enough for the whole group."""
    if group.n != p.n:
        raise ValueError(f"degree mismatch: {group.n} != {p.n}")
    return all(act(g, p) == p for g in group.generators)


def initial_monomial(order: TermOrder, p: SparsePolynomial) -> tuple[Exponent, int]:
    if not p:
        raise ValueError("zero polynomial has no initial monomial")
    if order.n != p.n:
        raise ValueError(f"degree mismatch: {order.n} != {p.n}")
    u = max(p._terms, key=order.key)
    return u, p._terms[u]


@dataclass(frozen=True)
class ComprehensiveBasis:
    """Elementary symmetric polynomials of every orbit, labelled (orbit index, degree)."""

    polys: tuple[SparsePolynomial, ...]
    labels: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.polys)

    def initial_exponents(self, order: TermOrder) -> list[Exponent]:
        return [initial_monomial(order, p)[0] for p in self.polys]


def comprehensive_basis(group: PermGroup) -> ComprehensiveBasis:
    polys, labels = [], []
    for i, S in enumerate(group.orbits, start=1):
        for d in range(1, len(S) + 1):
            polys.append(elementary_symmetric(S, d, group.n))
            labels.append((i, d))
    return ComprehensiveBasis(tuple(polys), tuple(labels))


@functools.cache
def weak_compositions(d: int, n: int) -> tuple[Exponent, ...]:
    """All length-n nonnegative integer vectors summing to d, colex descending."""
    if n == 1:
        return ((d,),)
    out = []
    for last in range(d, -1, -1):
        for head in weak_compositions(d - last, n - 1):
            out.append(head + (last,))
    return tuple(out)
