"""Degree-truncated SAGBI bases of permutation invariants.

The minimal reduced SAGBI basis consists of the orbit sums of the irreducible
elements of the initial monoid, so everything here reduces to enumerating
lattice points of the initial cone and testing them for decompositions.
Bases of non-reflection groups are infinite; only truncations are computed.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .cone import ClosedVerdict, InitialCone, Witness, is_initial_monomial, nonclosedness_witness
from .permgroup import PermGroup, ReflectionCertificate, is_reflection_generated
from .poly import (
    ComprehensiveBasis,
    Exponent,
    SparsePolynomial,
    comprehensive_basis,
    orbit_sum,
    weak_compositions,
)
from .termorder import TermOrder

DEFAULT_COUNT_BOUND = 12


@dataclass(frozen=True)
class SagbiElement:
    exponent: Exponent
    polynomial: SparsePolynomial
    degree: int

    def to_json(self, order: TermOrder | None = None) -> dict:
        return {
            "degree": self.degree,
            "exponent": list(self.exponent),
            "orbit_sum": self.polynomial.to_json(order),
        }


def enumerate_initial_monomials(cone: InitialCone, d: int) -> list[Exponent]:
    """Exponents of degree ``d`` in the initial monoid, descending under the order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    found = [u for u in weak_compositions(d, cone.n) if is_initial_monomial(cone, u)]
    return sorted(found, key=cone.order.key, reverse=True)


def is_irreducible(cone: InitialCone, u: Sequence[int]) -> bool:
    """Brute force over the box 0 <= v <= u for a split u = v + (u - v) inside the monoid.

    Only |v| <= |u|/2 is tried, and at |v| = |u|/2 only v <= u - v.
    """
    u = tuple(u)
    total = sum(u)
    if total == 0:
        raise ValueError("the zero vector is not irreducible by convention")
    if not is_initial_monomial(cone, u):
        raise ValueError(f"{u} is not in the initial monoid")
    order = cone.order
    for v in itertools.product(*(range(x + 1) for x in u)):
        dv = sum(v)
        if dv == 0 or 2 * dv > total:
            continue
        w = tuple(a - b for a, b in zip(u, v))
        if 2 * dv == total and order.key(v) > order.key(w):
            continue
        if is_initial_monomial(cone, v) and is_initial_monomial(cone, w):
            return False
    return True


def _irreducibles_by_degree(cone: InitialCone, max_degree: int) -> dict[int, list[Exponent]]:
    """Irreducibles per degree, found by subtracting lower-degree monoid elements."""
    monoid: set[Exponent] = set()
    by_degree: dict[int, list[Exponent]] = {}
    out: dict[int, list[Exponent]] = {}
    for d in range(1, max_degree + 1):
        layer = enumerate_initial_monomials(cone, d)
        irr = []
        for u in layer:
            reducible = False
            for k in range(1, d // 2 + 1):
                for v in by_degree.get(k, ()):
                    if all(a <= b for a, b in zip(v, u)):
                        if tuple(b - a for a, b in zip(v, u)) in monoid:
                            reducible = True
                            break
                if reducible:
                    break
            if not reducible:
                irr.append(u)
        by_degree[d] = layer
        monoid.update(layer)
        out[d] = irr
    return out


def minimal_sagbi_up_to(cone: InitialCone, max_degree: int) -> list[SagbiElement]:
    """Minimal SAGBI basis elements of degree <= max_degree, by degree then order."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    out = []
    for d, irr in _irreducibles_by_degree(cone, max_degree).items():
        for u in irr:
            out.append(SagbiElement(u, orbit_sum(cone.group, u), d))
    return out


def irreducible_counts(cone: InitialCone, max_degree: int) -> list[tuple[int, int]]:
    return [(d, len(irr)) for d, irr in _irreducibles_by_degree(cone, max_degree).items()]


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    certificate: ReflectionCertificate
    basis: ComprehensiveBasis | None = None
    witness: Witness | None = None
    irreducible_counts: tuple[tuple[int, int], ...] | None = None

    def to_json(self, order: TermOrder | None = None) -> dict:
        cert = self.certificate
        out = {
            "finite": self.finite,
            "reflection_generated": cert.verdict,
            "transpositions": [list(p) for p in cert.transpositions],
            "obstruction": list(cert.obstruction) if cert.obstruction else None,
            "basis": None,
            "witness": None,
            "irreducible_counts": None,
        }
        if self.basis is not None:
            out["basis"] = [
                {"orbit": i, "degree": d, "poly": p.to_json(order)}
                for (i, d), p in zip(self.basis.labels, self.basis.polys)
            ]
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.irreducible_counts is not None:
            out["irreducible_counts"] = [
                {"degree": d, "count": c} for d, c in self.irreducible_counts
            ]
        return out


def finiteness_verdict(
    group: PermGroup, order: TermOrder, count_bound: int = DEFAULT_COUNT_BOUND
) -> FinitenessVerdict:
    """Finite exactly when the group is generated by transpositions."""
    cert = is_reflection_generated(group)
    if cert.verdict:
        return FinitenessVerdict(True, cert, basis=comprehensive_basis(group))
    cone = InitialCone(group, order)
    witness = nonclosedness_witness(cone)
    assert not isinstance(witness, ClosedVerdict)
    counts = tuple(irreducible_counts(cone, count_bound)) if count_bound >= 1 else ()
    return FinitenessVerdict(False, cert, witness=witness, irreducible_counts=counts)


def verify_generates(
    cone: InitialCone, generators: Sequence[Sequence[int]], max_degree: int
) -> bool | Exponent:
    """Check that the generators span the monoid up to ``max_degree``.

    Returns True, or the order-smallest monoid element of degree <= max_degree
    that is not a sum of generators.
    """
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != cone.n or not is_initial_monomial(cone, g):
            raise ValueError(f"generator {g} is not in the initial monoid")
    gens = [g for g in gens if any(g)]
    reachable: set[Exponent] = {(0,) * cone.n}
    missing = []
    for d in range(1, max_degree + 1):
        for u in enumerate_initial_monomials(cone, d):
            for g in gens:
                if all(a <= b for a, b in zip(g, u)):
                    if tuple(b - a for a, b in zip(g, u)) in reachable:
                        reachable.add(u)
                        break
            else:
                missing.append(u)
    if not missing:
        return True
    return min(missing, key=cone.order.key)


def degree_histogram(elements: Sequence[SagbiElement]) -> dict[int, int]:
    return dict(sorted(Counter(e.degree for e in elements).items()))
