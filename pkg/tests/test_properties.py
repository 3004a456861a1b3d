"""Invariants checked on generated semigroups."""

from itertools import product

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

import values as V
from mpdsemigroups import catalog
from mpdsemigroups.classify import PSEUDO_SYMMETRIC, SYMMETRIC, classify_symmetry, quasi_frobenius, wilf_check
from mpdsemigroups.core import AffineSemigroup, vadd
from mpdsemigroups.errors import NonMinimalGeneratingSet, NotSimplicial
from mpdsemigroups.gaps import gaps, pseudo_frobenius
from mpdsemigroups.orders import GREVLEX, GRLEX, LEX
from mpdsemigroups.resolution import k_polynomial
from mpdsemigroups.rf import check_zero_pattern, rf_determinant, rf_matrix, rf_relations
from mpdsemigroups.toric import is_generic

SETTINGS = settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])


@st.composite
def c_semigroups(draw):
    """Full-orthant semigroups; most of them have a finite nonempty gap set."""
    p = draw(st.integers(2, 4))
    q = draw(st.integers(2, 4))
    extra = draw(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), max_size=3))
    gens = {(p, 0), (p + 1, 0), (0, q), (0, q + 1), (1, 1)} | set(extra)
    try:
        S = AffineSemigroup(sorted(gens))
    except NonMinimalGeneratingSet:
        assume(False)
    H = gaps(S)
    assume(H.certified and H.elements)
    return S


@st.composite
def two_dim(draw):
    gens = sorted(set(draw(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)).filter(any), min_size=3, max_size=5))))
    try:
        S = AffineSemigroup(gens)
    except NonMinimalGeneratingSet:
        assume(False)
    assume(S.group_rank == 2)
    return S


@given(c_semigroups(), st.sampled_from([GRLEX, LEX, GREVLEX]))
@SETTINGS
def test_counting_matches_definition(S, order):
    r = classify_symmetry(S, order)
    assert r.counting is True
    H = gaps(S)
    F = r.frobenius
    below = sum(1 for g in product(range(F[0] + 1), range(F[1] + 1)) if S.contains(g))
    assert r.below_frobenius == below
    if r.classification == SYMMETRIC:
        assert len(H) == below
    if r.classification == PSEUDO_SYMMETRIC:
        assert all(x % 2 == 0 for x in F)
        assert tuple(x // 2 for x in F) in r.pf


@given(c_semigroups(), st.sampled_from([GRLEX, GREVLEX]))
@SETTINGS
def test_wilf_on_symmetric(S, order):
    r = classify_symmetry(S, order)
    assume(r.classification in (SYMMETRIC, PSEUDO_SYMMETRIC))
    assert wilf_check(S, order).holds


@given(c_semigroups())
@SETTINGS
def test_almost_symmetric_involution(S):
    r = classify_symmetry(S, GRLEX)
    rest = set(r.pf) - {r.frobenius}
    if r.classification in ("AlmostSymmetric", PSEUDO_SYMMETRIC):
        assert {tuple(a - b for a, b in zip(r.frobenius, g)) for g in rest} == rest


@given(two_dim())
@SETTINGS
def test_zero_pattern_and_determinant(S):
    pf = pseudo_frobenius(S)
    assume(pf.certified and pf.elements)
    for f in pf.elements:
        assert rf_determinant(rf_matrix(S, f), S) == 0
    for f, g in product(pf.elements[:3], repeat=2):
        if not S.contains(vadd(f, g)):
            assert check_zero_pattern(S, f, g, rf_matrix(S, f), rf_matrix(S, g))


@given(two_dim())
@SETTINGS
def test_rf_relations_lie_in_ideal(S):
    pf = pseudo_frobenius(S)
    assume(pf.certified and pf.elements)
    for rel in rf_relations(S, pf.elements[0], limit=2):
        b = rel.binomial
        assert S.contains(b.degree)
        assert b.plus in S.factorizations(b.degree) and b.minus in S.factorizations(b.degree)


@given(two_dim())
@SETTINGS
def test_pf_and_qf_disjoint(S):
    pf = pseudo_frobenius(S)
    assume(pf.certified and pf.elements)
    try:
        qf = quasi_frobenius(S)
    except NotSimplicial:
        assume(False)
    assert not set(qf.elements) & set(pf.elements)


@given(c_semigroups())
@SETTINGS
def test_k_polynomial_strategies(S):
    K = k_polynomial(S, "TruncatedSeries")
    assert K == k_polynomial(S, "FullConeIdentity")
    assert sum(K.terms.values()) == 0


def test_gluings_are_not_generic():
    assert not is_generic(catalog.example("gluing")).value
    for S, _, _ in V.random_gluings(12, seed=3):
        assert S.n >= 3
        assert not is_generic(S).value
