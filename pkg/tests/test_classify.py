import pytest

from mpdsemigroups import catalog
from mpdsemigroups.classify import (
    ALMOST_SYMMETRIC,
    NONE,
    PSEUDO_SYMMETRIC,
    SYMMETRIC,
    classify_symmetry,
    definitional_class,
    quasi_frobenius,
    simplicial_rays,
    wilf_check,
)
from mpdsemigroups.core import AffineSemigroup
from mpdsemigroups.errors import (
    NoFrobeniusElement,
    NotCSemigroup,
    NotSimplicial,
    PreconditionFailed,
    UncertifiedApery,
    UncertifiedPF,
)
from mpdsemigroups.orders import GREVLEX, GRLEX, LEX


def test_examples():
    r = classify_symmetry(catalog.example("symmetric-s1"), GRLEX)
    assert r.classification == SYMMETRIC and r.frobenius == (7, 2)
    r = classify_symmetry(catalog.example("pseudo-symmetric"), GRLEX)
    assert r.classification == PSEUDO_SYMMETRIC and r.frobenius == (2, 6)
    assert set(r.pf) == {(1, 3), (2, 6)}
    assert r.gap_count == 11 and r.counting
    for order in (GRLEX, LEX, GREVLEX):
        r = classify_symmetry(catalog.example("symmetric-s2"), order)
        assert r.classification == SYMMETRIC and r.frobenius == (1, 2)
        assert r.gap_count == r.below_frobenius == 3


def test_definitional_class():
    assert definitional_class([(4,)], (4,)) == SYMMETRIC
    assert definitional_class([(2,), (4,)], (4,)) == PSEUDO_SYMMETRIC
    assert definitional_class([(1,), (3,), (4,)], (4,)) == ALMOST_SYMMETRIC
    assert definitional_class([(1,), (4,)], (4,)) == NONE


def test_numerical_almost_symmetric():
    # <5, 6, 8, 9>: PF = {3, 4, 7}, 3 + 4 = 7
    S = AffineSemigroup([(5,), (6,), (8,), (9,)])
    r = classify_symmetry(S, GRLEX)
    assert set(r.pf) == {(3,), (4,), (7,)}
    assert r.classification == ALMOST_SYMMETRIC


def test_errors():
    with pytest.raises(NoFrobeniusElement):
        classify_symmetry(AffineSemigroup([(1, 0), (0, 1)]), GRLEX)
    with pytest.raises(NoFrobeniusElement):
        classify_symmetry(catalog.example("rf-example"), GRLEX)
    T = AffineSemigroup([(2, 0, 1), (0, 2, 1), (2, 2, 1), (0, 0, 1)])
    with pytest.raises(UncertifiedPF):
        classify_symmetry(T, GRLEX)


def test_wilf():
    w = wilf_check(catalog.example("pseudo-symmetric"), GRLEX)
    assert w.holds and w.N == 11 + w.sporadic and w.lhs == 6 * w.sporadic
    assert wilf_check(catalog.example("symmetric-s2"), GREVLEX).holds
    with pytest.raises(NotCSemigroup):
        wilf_check(AffineSemigroup([(1, 0), (0, 1)]), GRLEX)
    with pytest.raises(PreconditionFailed):
        wilf_check(catalog.example("symmetric-s2"), LEX)


def test_wilf_sporadic_count_by_hand():
    # S2: F = (1, 2); elements of S of degree < 3 or degree 3 and grlex-below (1, 2)
    w = wilf_check(catalog.example("symmetric-s2"), GRLEX)
    S = catalog.example("symmetric-s2")
    pts = [(x, y) for x in range(4) for y in range(4) if x + y <= 3 and S.contains((x, y))]
    below = [p for p in pts if GRLEX.key(p) < GRLEX.key((1, 2))]
    assert w.sporadic == len(below)


def test_quasi_frobenius():
    for h in (2, 3):
        S = AffineSemigroup(catalog.bresinsky(h))
        q = quasi_frobenius(S)
        assert len(q.elements) == 4 * h
        assert catalog.bresinsky_pf(h) not in q.elements
    # two generators on one ray
    with pytest.raises(NotSimplicial):
        quasi_frobenius(catalog.example("symmetric-s2"))
    with pytest.raises(NotSimplicial):
        simplicial_rays(AffineSemigroup([(2, 0, 1), (0, 2, 1), (2, 2, 1), (0, 0, 1)]))
    with pytest.raises(UncertifiedApery):
        quasi_frobenius(AffineSemigroup(catalog.bresinsky(2)), bound=(20, 20))


def test_report_json():
    r = classify_symmetry(catalog.example("symmetric-s1"), GRLEX)
    out = r.to_json()
    assert out["classification"] == SYMMETRIC and out["frobenius"] == [7, 2]
