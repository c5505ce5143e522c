"""Finiteness of SAGBI bases for invariant rings of permutation groups.

The package decides, for a permutation group ``G`` and an admissible term
order, whether the ring of ``G``-invariants has a finite SAGBI basis, lists
minimal SAGBI basis elements degree by degree, and builds exact rational
witnesses showing that the initial convex cone is not closed.
"""

from .permgroup import (
    GroupTooLarge,
    PermGroup,
    Permutation,
    ReflectionCertificate,
    act_on_exponents,
    compose,
    contains,
    generate_group,
    is_reflection_generated,
    parse_permutation,
)
from .termorder import LexSign, TermOrder, compare, lex_sign, make_order
from .poly import (
    ComprehensiveBasis,
    SparsePolynomial,
    act,
    comprehensive_basis,
    elementary_symmetric,
    initial_monomial,
    is_invariant,
    orbit_sum,
)
from .cone import (
    ClosedVerdict,
    InitialCone,
    Interval,
    IntervalSet,
    TheoremContradiction,
    Witness,
    halfplane_irreducibles,
    nonclosedness_witness,
    segment_membership,
    verify_witness,
)
from .sagbi import (
    FinitenessVerdict,
    SagbiElement,
    enumerate_initial_monomials,
    finiteness_verdict,
    is_irreducible,
    minimal_sagbi_up_to,
    verify_generates,
)

__version__ = "0.1.0"
