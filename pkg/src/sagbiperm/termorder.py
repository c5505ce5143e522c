"""Admissible term orders given by a full-rank matrix of rational linear forms.

``x^u > x^v`` iff the image vector ``(l_1(u), ..., l_n(u))`` is
lexicographically larger than that of ``v``. All arithmetic is exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


class LexSign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


# compare() results, as -1/0/1 for easy use with sorted(key=cmp_to_key(...))
LESS, EQUAL, GREATER = -1, 0, 1

KINDS = ("lex", "grlex", "grevlex", "custom")


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _builtin_rows(kind: str, n: int) -> list[list[int]]:
    def unit(i):
        return [1 if j == i else 0 for j in range(n)]

    if kind == "lex":
        return [unit(i) for i in range(n)]
    if kind == "grlex":
        return [[1] * n] + [unit(i) for i in range(n - 1)]
    if kind == "grevlex":
        return [[1] * n] + [[-x for x in unit(i)] for i in range(n - 1, 0, -1)]
    raise ValueError(f"unknown order kind {kind!r}")


@dataclass(frozen=True)
class TermOrder:
    n: int
    rows: tuple[tuple[Fraction, ...], ...]
    kind: str = "custom"
    # each row scaled by the lcm of its denominators; positive scaling keeps lex signs
    _int_rows: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        if self.n < 1 or len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"order matrix must be {self.n}x{self.n}")
        if _rank(rows) != self.n:
            raise ValueError("order matrix is rank-deficient")
        for i in range(self.n):
            first = next((r[i] for r in rows if r[i] != 0), None)
            if first is None or first < 0:
                raise ValueError(
                    f"not admissible: first nonzero entry of column {i + 1} must be positive "
                    f"(x{i + 1} > 1)"
                )
        scaled = []
        for r in rows:
            lcm = math.lcm(*(x.denominator for x in r))
            scaled.append(tuple(int(x * lcm) for x in r))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_int_rows", tuple(scaled))

    def lex_sign(self, d: Sequence) -> LexSign:
        return lex_sign(self, d)

    def compare(self, u: Sequence, v: Sequence) -> int:
        return compare(self, u, v)

    def key(self, u: Sequence) -> tuple:
        """Sort key: images under the (scaled) linear forms."""
        return tuple(sum(a * x for a, x in zip(row, u)) for row in self._int_rows)

    def variable_ranking(self) -> tuple[int, ...]:
        """Variables (1-based) listed from largest to smallest under this order."""
        units = [tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n)]
        ranked = sorted(range(self.n), key=lambda i: self.key(units[i]), reverse=True)
        return tuple(i + 1 for i in ranked)

    def spec(self) -> str:
        if self.kind != "custom":
            return self.kind
        return "matrix:" + ";".join(" ".join(str(x) for x in r) for r in self.rows)


def make_order(kind: str, n: int, matrix: Sequence[Sequence] | None = None) -> TermOrder:
    """Build a lex, grlex, grevlex or custom matrix order on n variables."""
    if kind == "custom":
        if matrix is None:
            raise ValueError("custom order requires a matrix")
        return TermOrder(n, tuple(tuple(r) for r in matrix), "custom")
    if matrix is not None:
        raise ValueError(f"{kind} order does not take a matrix")
    return TermOrder(n, tuple(tuple(r) for r in _builtin_rows(kind, n)), kind)


def lex_sign(order: TermOrder, d: Sequence) -> LexSign:
    """Sign of the first nonzero image l_k(d), or ZERO when all vanish."""
    if len(d) != order.n:
        raise ValueError(f"length mismatch: {len(d)} != {order.n}")
    for row in order._int_rows:
        s = sum(a * x for a, x in zip(row, d) if a)
        if s > 0:
            return LexSign.POSITIVE
        if s < 0:
            return LexSign.NEGATIVE
    return LexSign.ZERO


def compare(order: TermOrder, u: Sequence, v: Sequence) -> int:
    """Return GREATER, EQUAL or LESS (1, 0, -1) for u against v."""
    if len(u) != order.n or len(v) != order.n:
        raise ValueError("length mismatch")
    return int(lex_sign(order, [a - b for a, b in zip(u, v)]))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def read_matrix(text: str) -> list[list[Fraction]]:
    """Parse n lines of n whitespace-separated rationals (``p/q`` or integers)."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([parse_rational(tok) for tok in line.split()])
    if not rows:
        raise ValueError("empty matrix file")
    return rows


def order_from_spec(spec: str, n: int) -> TermOrder:
    """Resolve ``lex`` | ``grlex`` | ``grevlex`` | ``matrix:<path>``."""
    if spec in ("lex", "grlex", "grevlex"):
        return make_order(spec, n)
    if spec.startswith("matrix:"):
        with open(spec[len("matrix:"):], encoding="utf-8") as fh:
            rows = read_matrix(fh.read())
        return make_order("custom", n, rows)
    raise ValueError(f"bad order spec {spec!r}; expected lex, grlex, grevlex or matrix:<path>")
