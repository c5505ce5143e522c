"""The initial convex cone of a permutation group under a term order.

A nonnegative vector ``u`` lies in the cone when ``u - g.u`` is
lexicographically nonnegative under the order's linear forms for every
``g`` in the group. Its integer points are exactly the exponents of initial
monomials of invariants. For groups not generated by transpositions the cone
is not closed, and :func:`nonclosedness_witness` exhibits a boundary point
that is missing from the cone but approached by points inside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .permgroup import (
    PermGroup,
    Permutation,
    ReflectionCertificate,
    obstruction_pair,
    act_on_exponents,
    is_reflection_generated,
)
from .termorder import LexSign, TermOrder, lex_sign

Number = int | Fraction


class TheoremContradiction(RuntimeError):
    """No non-closed segment was found for a group that is not reflection-generated."""


def _vec(u: Iterable) -> tuple[Number, ...]:
    out = []
    for x in u:
        if isinstance(x, (int, Fraction)):
            out.append(x)
        elif isinstance(x, str):
            out.append(Fraction(x))
        else:
            raise TypeError(f"exact rational expected, got {type(x).__name__}")
    return tuple(out)


def _fmt(x: Number) -> str | int:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


@dataclass(frozen=True)
class InitialCone:
    group: PermGroup
    order: TermOrder
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.group.n != self.order.n:
            raise ValueError(
                f"degree mismatch: group on {self.group.n} points, order on {self.order.n}"
            )

    @property
    def n(self) -> int:
        return self.group.n

    def __contains__(self, u) -> bool:
        return contains(self, u)


def contains(cone: InitialCone, u: Sequence) -> bool:
    """Exact membership of a nonnegative rational vector."""
    u = _vec(u)
    if len(u) != cone.n:
        raise ValueError(f"length mismatch: {len(u)} != {cone.n}")
    if any(x < 0 for x in u):
        raise ValueError(f"negative coordinate in {u}")
    order = cone.order
    for g in cone.group.elements:
        gu = act_on_exponents(g, u)
        if lex_sign(order, [a - b for a, b in zip(u, gu)]) is LexSign.NEGATIVE:
            return False
    return True


def _in_closed_orthant_cone(cone: InitialCone, u: Sequence) -> bool:
    return all(x >= 0 for x in u) and contains(cone, u)


def is_initial_monomial(cone: InitialCone, u: Sequence[int]) -> bool:
    """Whether x^u is the initial monomial of some invariant."""
    u = tuple(u)
    if len(u) != cone.n:
        raise ValueError(f"length mismatch: {len(u)} != {cone.n}")
    hit = cone._cache.get(u)
    if hit is None:
        hit = cone._cache[u] = contains(cone, u)
    return hit


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __contains__(self, t) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.lo_closed:
            return False
        if t == self.hi and not self.hi_closed:
            return False
        return True

    @property
    def closed(self) -> bool:
        return self.lo_closed and self.hi_closed

    def __str__(self):
        if self.lo == self.hi:
            return f"{{{self.lo}}}"
        return (
            ("[" if self.lo_closed else "(")
            + f"{self.lo}, {self.hi}"
            + ("]" if self.hi_closed else ")")
        )


@dataclass(frozen=True)
class IntervalSet:
    """Disjoint, maximally merged intervals inside ``domain``."""

    pieces: tuple[Interval, ...]
    domain: tuple[Fraction, Fraction]

    def __contains__(self, t) -> bool:
        return any(t in p for p in self.pieces)

    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def closed(self) -> bool:
        return all(p.closed for p in self.pieces)

    def __str__(self):
        return " U ".join(map(str, self.pieces)) if self.pieces else "{}"


def _assemble(atoms: list[tuple[Fraction, Fraction, bool]], domain) -> IntervalSet:
    """Merge consecutive atoms (point or open cell) flagged as members.

    Each atom is (lo, hi, member); lo == hi marks a single point.
    """
    pieces = []
    cur = None  # [lo, hi, lo_closed, hi_closed]
    for lo, hi, member in atoms:
        is_point = lo == hi
        if member:
            if cur is None:
                cur = [lo, hi, is_point, is_point]
            else:
                cur[1], cur[3] = hi, is_point
        elif cur is not None:
            pieces.append(Interval(*cur))
            cur = None
    if cur is not None:
        pieces.append(Interval(*cur))
    return IntervalSet(tuple(pieces), domain)


def segment_membership(
    cone: InitialCone,
    base: Sequence,
    direction: Sequence,
    translate: Permutation,
    domain: tuple = (0, 1),
) -> IntervalSet:
    """Exact set of t in ``domain`` with translate.(base + t*direction) in the cone.

    Every image l_k(p(t) - g.p(t)) is affine in t. All of their roots inside
    the domain are used as breakpoints, and membership is evaluated on each
    breakpoint and at the midpoint of each open cell between them.
    """
    base, direction = _vec(base), _vec(direction)
    n = cone.n
    if len(base) != n or len(direction) != n or translate.n != n:
        raise ValueError("degree mismatch")
    lo, hi = Fraction(domain[0]), Fraction(domain[1])
    if lo > hi:
        raise ValueError(f"empty domain [{lo}, {hi}]")
    P = act_on_exponents(translate, base)
    Q = act_on_exponents(translate, direction)
    for t in (lo, hi):
        if any(p + t * q < 0 for p, q in zip(P, Q)):
            raise ValueError(f"path leaves the nonnegative orthant at t={t}")

    rows = cone.order._int_rows
    breaks = {lo, hi}
    for g in cone.group.elements:
        gP, gQ = act_on_exponents(g, P), act_on_exponents(g, Q)
        dP = [a - b for a, b in zip(P, gP)]
        dQ = [a - b for a, b in zip(Q, gQ)]
        for row in rows:
            alpha = sum(r * x for r, x in zip(row, dP))
            beta = sum(r * x for r, x in zip(row, dQ))
            if beta:
                t = Fraction(-alpha) / beta
                if lo < t < hi:
                    breaks.add(t)
    pts = sorted(breaks)

    def member(t):
        return contains(cone, [p + t * q for p, q in zip(P, Q)])

    atoms = [(pts[0], pts[0], member(pts[0]))]
    for a, b in zip(pts, pts[1:]):
        atoms.append((a, b, member((a + b) / 2)))
        atoms.append((b, b, member(b)))
    return _assemble(atoms, (lo, hi))


@dataclass(frozen=True)
class Witness:
    """A point outside the cone that is a limit of points inside it.

    ``point + s*direction`` is in the cone for every rational 0 < s <= s_max.
    """

    point: tuple[Fraction, ...]
    direction: tuple[Fraction, ...]
    s_max: Fraction
    obstruction_pair: tuple[int, int]
    translate: Permutation
    t_star: Fraction

    def to_json(self) -> dict:
        return {
            "point": [_fmt(x) for x in self.point],
            "direction": [_fmt(x) for x in self.direction],
            "s_max": str(Fraction(self.s_max)),
            "t_star": str(Fraction(self.t_star)),
            "sigma": self.translate.cycle_notation(),
            "pair": list(self.obstruction_pair),
        }

    @classmethod
    def from_json(cls, data: dict, n: int) -> Witness:
        from .permgroup import parse_permutation

        return cls(
            point=tuple(Fraction(str(x)) for x in data["point"]),
            direction=tuple(Fraction(str(x)) for x in data["direction"]),
            s_max=Fraction(data["s_max"]),
            obstruction_pair=tuple(data["pair"]),
            translate=parse_permutation(data["sigma"], n),
            t_star=Fraction(data["t_star"]),
        )


@dataclass(frozen=True)
class ClosedVerdict:
    """Returned instead of a witness for reflection-generated groups."""

    certificate: ReflectionCertificate
    reason: str = "group is generated by transpositions; the initial cone is closed"


def probe_path(cone: InitialCone) -> tuple[tuple[int, int], list[int], list[int]]:
    """The pair and affine path u_t = base + t*direction used for witnesses.

    Variables are ranked from largest to smallest under the order; with the
    usual x1 > ... > xn this ranking is the identity. The pair (a, b) has b of
    minimal rank, then a of minimal rank, among orbit-mates whose
    transposition is missing. On u_t the variable of rank j carries
    (n - j)*t, except b which carries the constant n - rank(b).
    """
    n = cone.n
    rank = cone.order.variable_ranking()
    pair = obstruction_pair(cone.group, rank)
    if pair is None:
        raise ValueError("group is generated by transpositions; no probe path")
    b_rank = rank.index(pair[1]) + 1
    base, direction = [0] * n, [0] * n
    for j, var in enumerate(rank, start=1):
        if var == pair[1]:
            base[var - 1] = n - j
        else:
            direction[var - 1] = n - j
    assert b_rank < n
    return pair, base, direction


def nonclosedness_witness(cone: InitialCone) -> Witness | ClosedVerdict:
    cert = is_reflection_generated(cone.group)
    if cert.verdict:
        return ClosedVerdict(cert)
    pair, base, direction = probe_path(cone)
    for sigma in cone.group.elements:
        iset = segment_membership(cone, base, direction, sigma, (0, 1))
        for piece in iset.pieces:
            if piece.lo == piece.hi or piece.closed:
                continue
            P = act_on_exponents(sigma, base)
            Q = act_on_exponents(sigma, direction)
            if not piece.lo_closed:
                t_star, sign = piece.lo, 1
                far, far_closed = piece.hi, piece.hi_closed
            else:
                t_star, sign = piece.hi, -1
                far, far_closed = piece.lo, piece.lo_closed
            s_max = abs(far - t_star)
            if not far_closed:
                s_max /= 2
            point = tuple(Fraction(p) + t_star * q for p, q in zip(P, Q))
            d = tuple(Fraction(sign * q) for q in Q)
            return Witness(point, d, s_max, pair, sigma, t_star)
    raise TheoremContradiction(
        f"no non-closed segment for a group that is not generated by transpositions "
        f"(pair {pair}); this would contradict the finiteness theorem"
    )


def verify_witness(cone: InitialCone, w: Witness, samples: int = 20) -> bool:
    """Check p not in C and p + s_max*2^-k*d in C for k = 0..samples-1."""
    if _in_closed_orthant_cone(cone, w.point):
        return False
    for k in range(samples):
        s = Fraction(w.s_max) / 2**k
        q = [p + s * d for p, d in zip(w.point, w.direction)]
        if not _in_closed_orthant_cone(cone, q):
            return False
    return True


def halfplane_irreducibles(slope, x_max: int) -> list[tuple[int, int]]:
    """Irreducible elements of {(0,0)} U {(x,y) in N^2 : y > slope*x} with x <= x_max.

    For each x only y up to ceil(slope*x) + 1 is searched: anything higher
    splits off (0, 1). Irreducibility is decided by brute force.
    """
    a = Fraction(slope)
    if a <= 0:
        raise ValueError("slope must be positive")
    if x_max < 0:
        raise ValueError("x_max must be nonnegative")

    def in_monoid(x, y):
        return (x == 0 and y == 0) or y > a * x

    out = []
    for x in range(x_max + 1):
        for y in range(math.ceil(a * x) + 2):
            if (x, y) == (0, 0) or not in_monoid(x, y):
                continue
            split = any(
                in_monoid(x1, y1) and in_monoid(x - x1, y - y1)
                for x1 in range(x + 1)
                for y1 in range(y + 1)
                if (x1, y1) not in ((0, 0), (x, y))
            )
            if not split:
                out.append((x, y))
    return out
