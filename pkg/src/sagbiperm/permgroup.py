"""Permutations of {1..n} and finitely generated permutation groups.

Every external surface is 1-based. Groups are enumerated completely by a
breadth-first closure, which is fine for the small degrees this package is
meant for (n up to roughly 10).
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_CAP = 1_000_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class GroupTooLarge(RuntimeError):
    """Closure exceeded the configured element cap."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}, stored as its tuple of 1-based images."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self):
        return self.cycle_notation()


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse disjoint cycles such as ``"(1 2 3)(4 5)"`` into a degree-n permutation."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation text")
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(1, n + 1))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.split()
        try:
            points = [int(tok) for tok in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        for p in points:
            if p < 1 or p > n:
                raise ValueError(f"point {p} out of range 1..{n}")
            if p in used:
                raise ValueError(f"point {p} repeated in {text!r}")
            used.add(p)
        for i, p in enumerate(points):
            images[p - 1] = points[(i + 1) % len(points)]
    return Permutation(tuple(images))


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Return g∘h, i.e. apply h first."""
    if g.n != h.n:
        raise ValueError(f"degree mismatch: {g.n} != {h.n}")
    gi = g.images
    return Permutation(tuple(gi[j - 1] for j in h.images))


def act_on_exponents(g: Permutation, u: Sequence) -> tuple:
    """Move entry i of ``u`` to position g(i), so that g.x^u = x^(g.u)."""
    if len(u) != g.n:
        raise ValueError(f"length mismatch: vector of length {len(u)}, degree {g.n}")
    out = [None] * g.n
    for i, j in enumerate(g.images):
        out[j - 1] = u[i]
    return tuple(out)


def _orbits(n: int, generators: Iterable[Permutation]) -> tuple[frozenset[int], ...]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for i in range(1, n + 1):
            ri, rj = find(i), find(g(i))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    blocks: dict[int, set[int]] = {}
    for i in range(1, n + 1):
        blocks.setdefault(find(i), set()).add(i)
    return tuple(frozenset(b) for b in sorted(blocks.values(), key=min))


def _closure(n: int, generators: Sequence[Permutation], cap: int) -> list[Permutation]:
    ident = Permutation.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupTooLarge(
                        f"group has more than {cap} elements; too large to enumerate"
                    )
                queue.append(y)
    return sorted(seen)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group with all of its elements listed in canonical order."""

    n: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] = field(repr=False)
    orbits: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "_element_set", frozenset(self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return contains(self, p)

    @property
    def order(self) -> int:
        return len(self.elements)

    def orbit_of(self, i: int) -> frozenset[int]:
        for block in self.orbits:
            if i in block:
                return block
        raise ValueError(f"point {i} out of range 1..{self.n}")


def generate_group(
    generators: Sequence[Permutation], cap: int = DEFAULT_CAP, n: int | None = None
) -> PermGroup:
    """Enumerate the group generated by ``generators``.

    ``n`` is only needed when the generator list is empty (trivial group).
    Raises GroupTooLarge when more than ``cap`` elements turn up.
    """
    gens = tuple(generators)
    if n is None:
        if not gens:
            raise ValueError("degree n is required for an empty generator list")
        n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} has degree {g.n}, expected {n}")
    if cap < 1:
        raise ValueError("cap must be positive")
    return PermGroup(n, gens, tuple(_closure(n, gens, cap)), _orbits(n, gens))


def contains(group: PermGroup, p: Permutation) -> bool:
    if p.n != group.n:
        raise ValueError(f"degree mismatch: {p.n} != {group.n}")
    return p in group._element_set


@dataclass(frozen=True)
class ReflectionCertificate:
    """Outcome of the reflection-generation test.

    ``transpositions`` lists every (a, b), a < b, with (a b) in the group.
    ``obstruction`` is set only when the verdict is false: the pair a < b in
    a common orbit with (a b) missing, b minimal, then a minimal.
    """

    verdict: bool
    transpositions: tuple[tuple[int, int], ...]
    obstruction: tuple[int, int] | None


def _transpositions_in(group: PermGroup) -> list[tuple[int, int]]:
    out = []
    for a in range(1, group.n + 1):
        for b in range(a + 1, group.n + 1):
            if contains(group, Permutation.transposition(a, b, group.n)):
                out.append((a, b))
    return out


def obstruction_pair(group: PermGroup, rank: Sequence[int] | None = None) -> tuple[int, int] | None:
    """Minimal missing transposition inside an orbit.

    ``rank`` lists the points from largest to smallest variable; the pair is
    minimal with respect to positions in that list and is returned as
    (larger variable, smaller variable).
    """
    order = list(rank) if rank is not None else list(range(1, group.n + 1))
    for jb in range(len(order)):
        b = order[jb]
        for ja in range(jb):
            a = order[ja]
            if b not in group.orbit_of(a):
                continue
            if not contains(group, Permutation.transposition(a, b, group.n)):
                return (a, b)
    return None


def is_reflection_generated(group: PermGroup) -> ReflectionCertificate:
    """Decide whether ``group`` is the product of the symmetric groups on its orbits.

    The order formula and the closure of the contained transpositions are
    computed independently and must agree.
    """
    by_order = group.order == math.prod(math.factorial(len(s)) for s in group.orbits)
    transpositions = _transpositions_in(group)
    sub = generate_group(
        [Permutation.transposition(a, b, group.n) for a, b in transpositions],
        cap=group.order,
        n=group.n,
    )
    by_closure = sub.order == group.order
    if by_order != by_closure:
        raise AssertionError(
            f"reflection criteria disagree: order formula {by_order}, "
            f"transposition closure {by_closure}"
        )
    obstruction = None if by_order else obstruction_pair(group)
    if not by_order and obstruction is None:
        raise AssertionError("non-reflection group without an obstruction pair")
    return ReflectionCertificate(by_order, tuple(transpositions), obstruction)


def parse_generators(text: str, n: int | None = None) -> tuple[int, list[Permutation]]:
    """Parse ``"(1 2 3);(1 2)"`` (``;`` or ``,`` separated) into a degree and generators.

    Without ``n`` the degree is the largest point mentioned.
    """
    chunks = [c.strip() for c in re.split(r"[;,]", text) if c.strip()]
    if not chunks:
        raise ValueError("no generators given")
    if n is None:
        points = [int(tok) for tok in re.findall(r"-?\d+", text)]
        n = max(points, default=0)
        if n < 1:
            raise ValueError("cannot infer degree; pass n explicitly")
    return n, [parse_permutation(c, n) for c in chunks]


def read_group_file(text: str) -> tuple[int, list[Permutation]]:
    """Parse the group file format: ``n = <int>`` then one generator per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty group file")
    m = re.fullmatch(r"n\s*=\s*(\d+)", lines[0])
    if not m:
        raise ValueError(f"expected 'n = <integer>' on the first line, got {lines[0]!r}")
    n = int(m.group(1))
    if n < 1:
        raise ValueError("degree must be positive")
    return n, [parse_permutation(ln, n) for ln in lines[1:]]
