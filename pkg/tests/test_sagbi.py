import itertools

import pytest

from sagbiperm import (
    InitialCone,
    comprehensive_basis,
    enumerate_initial_monomials,
    finiteness_verdict,
    generate_group,
    initial_monomial,
    is_irreducible,
    make_order,
    minimal_sagbi_up_to,
    orbit_sum,
    verify_generates,
)
from sagbiperm.sagbi import irreducible_counts

from conftest import named, symmetric

KINDS = ["lex", "grlex", "grevlex"]


def monoid_oracle(g, order, d):
    """Degree-d exponents that dominate their whole orbit (tuple comparison of images)."""
    img = lambda w: tuple(sum(r * x for r, x in zip(row, w)) for row in order.rows)
    out = []
    for u in itertools.product(range(d + 1), repeat=g.n):
        if sum(u) != d:
            continue
        perms = {tuple(u[p.inverse()(j + 1) - 1] for j in range(g.n)) for p in g.elements}
        if all(img(v) <= img(u) for v in perms):
            out.append(u)
    return out


def irreducible_oracle(monoid, u):
    """Walk candidate parts v by ascending degree and look for u - v in the monoid."""
    for k in range(1, sum(u)):
        for v in monoid.get(k, ()):
            w = tuple(a - b for a, b in zip(u, v))
            if min(w) >= 0 and w in monoid.get(sum(u) - k, ()):
                return False
    return True


def oracle_monoid_table(g, order, D):
    return {d: set(monoid_oracle(g, order, d)) for d in range(D + 1)}


def a3lex():
    return InitialCone(named("C3"), make_order("lex", 3))


def test_enumerate_examples():
    cone = a3lex()
    assert enumerate_initial_monomials(cone, 2) == [(2, 0, 0), (1, 1, 0)]
    assert enumerate_initial_monomials(cone, 0) == [(0, 0, 0)]
    s3 = InitialCone(symmetric(3), make_order("lex", 3))
    assert enumerate_initial_monomials(s3, 1) == [(1, 0, 0)]


@pytest.mark.parametrize("name", ["C3", "V4", "A4", "D4", "C2x"])
@pytest.mark.parametrize("kind", KINDS)
def test_enumerate_matches_oracle(name, kind):
    g = named(name)
    order = make_order(kind, g.n)
    cone = InitialCone(g, order)
    for d in range(6):
        got = enumerate_initial_monomials(cone, d)
        assert set(got) == set(monoid_oracle(g, order, d))
        assert got == sorted(got, key=order.key, reverse=True)


def test_is_irreducible_examples():
    cone = a3lex()
    assert is_irreducible(cone, (1, 0, 0))
    assert not is_irreducible(cone, (2, 1, 0))
    assert is_irreducible(cone, (2, 0, 1))
    with pytest.raises(ValueError):
        is_irreducible(cone, (0, 0, 0))
    with pytest.raises(ValueError):
        is_irreducible(cone, (0, 1, 0))


def test_minimal_basis_examples():
    s3 = InitialCone(symmetric(3), make_order("lex", 3))
    assert [e.exponent for e in minimal_sagbi_up_to(s3, 3)] == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    got = [e.exponent for e in minimal_sagbi_up_to(a3lex(), 3)]
    assert got == [(1, 0, 0), (1, 1, 0), (2, 0, 1), (1, 1, 1)]
    trivial = InitialCone(generate_group([], n=1), make_order("lex", 1))
    assert [e.exponent for e in minimal_sagbi_up_to(trivial, 5)] == [(1,)]
    with pytest.raises(ValueError):
        minimal_sagbi_up_to(s3, 0)


@pytest.mark.parametrize("name", ["C3", "V4", "C4", "A4", "D4"])
@pytest.mark.parametrize("kind", KINDS)
def test_minimal_basis_sound_and_complete(name, kind):
    g = named(name)
    order = make_order(kind, g.n)
    cone = InitialCone(g, order)
    D = 7 if g.n == 3 else 5
    table = oracle_monoid_table(g, order, D)
    elements = minimal_sagbi_up_to(cone, D)
    emitted = {e.exponent for e in elements}
    for d in range(1, D + 1):
        want = {u for u in table[d] if irreducible_oracle(table, u)}
        assert {u for u in emitted if sum(u) == d} == want
        for u in enumerate_initial_monomials(cone, d):
            assert is_irreducible(cone, u) == (u in emitted)
    keys = [(e.degree, tuple(-x for x in order.key(e.exponent))) for e in elements]
    assert keys == sorted(keys)
    for e in elements:
        assert e.polynomial == orbit_sum(g, e.exponent)
        assert initial_monomial(order, e.polynomial) == (e.exponent, 1)
        assert e.degree == sum(e.exponent)


def test_a3_infinite_family():
    elements = {e.exponent for e in minimal_sagbi_up_to(a3lex(), 11)}
    for k in range(1, 6):
        assert (k + 1, 0, k) in elements


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("kind", KINDS)
def test_reflection_groups_basis_is_elementary(n, kind):
    g = symmetric(n)
    cone = InitialCone(g, make_order(kind, n))
    E = comprehensive_basis(g).initial_exponents(cone.order)
    got = [e.exponent for e in minimal_sagbi_up_to(cone, n + 2)]
    assert sorted(got) == sorted(E)


def test_product_of_symmetric_groups():
    g = named("S2xS2")
    for kind in KINDS:
        cone = InitialCone(g, make_order(kind, 4))
        E = comprehensive_basis(g).initial_exponents(cone.order)
        assert sorted(e.exponent for e in minimal_sagbi_up_to(cone, 5)) == sorted(E)
        assert verify_generates(cone, E, 6) is True


def test_verify_generates_examples():
    s3 = InitialCone(symmetric(3), make_order("lex", 3))
    E = comprehensive_basis(symmetric(3)).initial_exponents(s3.order)
    assert verify_generates(s3, E, 8) is True
    cone = a3lex()
    assert verify_generates(cone, [(1, 0, 0), (1, 1, 0), (1, 1, 1)], 3) == (2, 0, 1)
    everything = [u for d in range(1, 5) for u in enumerate_initial_monomials(cone, d)]
    assert verify_generates(cone, everything, 4) is True
    with pytest.raises(ValueError):
        verify_generates(cone, [(0, 1, 0)], 3)


@pytest.mark.parametrize("name", ["C3", "V4", "C4", "A4", "D4", "S3"])
def test_minimal_basis_generates_truncation(name):
    g = named(name)
    cone = InitialCone(g, make_order("grevlex", g.n))
    D = 6
    gens = [e.exponent for e in minimal_sagbi_up_to(cone, D)]
    assert verify_generates(cone, gens, D) is True


def test_finiteness_verdict_examples():
    v = finiteness_verdict(symmetric(4), make_order("grevlex", 4))
    assert v.finite and v.witness is None and len(v.basis) == 4
    v = finiteness_verdict(named("C3"), make_order("lex", 3), count_bound=11)
    assert not v.finite and v.basis is None and v.witness is not None
    counts = dict(v.irreducible_counts)
    assert all(counts[d] >= 1 for d in range(3, 12, 2))
    v = finiteness_verdict(named("C2x"), make_order("grlex", 4), count_bound=4)
    assert not v.finite
    data = v.to_json()
    assert data["finite"] is False and data["obstruction"] == [1, 2]


def test_irreducible_counts_a3():
    counts = irreducible_counts(a3lex(), 9)
    assert counts == [(1, 1), (2, 1), (3, 2), (4, 0), (5, 1), (6, 0), (7, 1), (8, 0), (9, 1)]
