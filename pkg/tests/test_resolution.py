import pytest

import values as V
from mpdsemigroups import catalog
from mpdsemigroups.core import AffineSemigroup
from mpdsemigroups.errors import (
    DegreeNotInSemigroup,
    PreconditionFailed,
    StrategyPreconditionFailed,
)
from mpdsemigroups.gaps import is_c_semigroup
from mpdsemigroups.orders import GREVLEX, GRLEX, LEX
from mpdsemigroups.polynomial import Polynomial
from mpdsemigroups.resolution import (
    BETTI_SUM,
    FULL_CONE_IDENTITY,
    TRUNCATED_SERIES,
    betti_number,
    betti_table,
    betti_vector,
    divisor_complex,
    euler_coefficient,
    frobenius_from_hilbert,
    is_mpd,
    k_polynomial,
    reduced_homology,
)


def _mask(*idx):
    return sum(1 << i for i in idx)


def test_reduced_homology_of_small_complexes():
    circle = {0, _mask(0), _mask(1), _mask(2), _mask(0, 1), _mask(0, 2), _mask(1, 2)}
    assert reduced_homology(circle, 1) == 1 and reduced_homology(circle, 0) == 0
    two_points = {0, _mask(0), _mask(1)}
    assert reduced_homology(two_points, 0) == 1
    simplex = circle | {_mask(0, 1, 2)}
    assert betti_vector(simplex, 4) == (0, 0, 0, 0)
    assert reduced_homology({0}, -1) == 1
    assert euler_coefficient(circle) == 1 - 3 + 3


def test_divisor_complex():
    S = catalog.example("symmetric-s2")
    D = divisor_complex(S, (0, 0))
    assert D.faces == {0}
    D = divisor_complex(S, (6, 0))
    assert D.is_closed()
    assert D.face_sets() == [(), (1,), (2,)]
    with pytest.raises(DegreeNotInSemigroup):
        divisor_complex(S, (1, 2))


def test_betti_four_generator():
    S = catalog.example("four-generator")
    t = betti_table(S)
    assert t.totals() == V.FOUR_GEN_BETTI
    assert set(t.support(3)) == V.FOUR_GEN_LAST
    assert t.projective_dimension() == 3
    for b in t.support(1):
        assert betti_number(S, 1, b) == 1


def test_betti_gluing_and_symmetric():
    G = catalog.example("gluing")
    assert betti_table(G).totals() == (1, 6, 13, 13, 6, 1)
    S1 = catalog.example("symmetric-s1")
    t = betti_table(S1)
    assert t.totals()[-1] == 1
    assert t.support(4) == [tuple(f + a for f, a in zip(V.SYMMETRIC_S1_F, S1.generator_sum))]


def test_betti_number_range():
    with pytest.raises(ValueError):
        betti_number(catalog.example("symmetric-s2"), 4, (0, 0))


def test_is_mpd():
    assert is_mpd(catalog.example("four-generator")).value
    assert not is_mpd(AffineSemigroup([(1, 0), (0, 1)])).value
    # linearly independent generators give a polynomial ring
    assert not is_mpd(AffineSemigroup([(2, 1), (1, 3)])).value


def test_k_polynomial_displayed():
    S2 = catalog.example("symmetric-s2")
    want = V.parse_polynomial(V.S2_K, 2)
    for strategy in (FULL_CONE_IDENTITY, TRUNCATED_SERIES, BETTI_SUM):
        assert k_polynomial(S2, strategy).terms == want


@pytest.mark.parametrize("name", ["symmetric-s1", "pseudo-symmetric", "four-generator", "gluing"])
def test_k_strategies_agree(name):
    S = catalog.example(name)
    K = k_polynomial(S, TRUNCATED_SERIES)
    assert K == k_polynomial(S, BETTI_SUM)
    if S.cone_is_full_orthant() and is_c_semigroup(S).value:
        assert K == k_polynomial(S, FULL_CONE_IDENTITY)
    # K(1) = 0 for a ring of dimension > 0
    assert sum(K.terms.values()) == 0


def test_k_leading_term():
    S1 = catalog.example("symmetric-s1")
    assert k_polynomial(S1).leading_exponent(GRLEX) == V.SYMMETRIC_S1_K_LEAD


def test_frobenius_from_hilbert():
    assert frobenius_from_hilbert(catalog.example("symmetric-s2"), GRLEX) == (1, 2)
    P = catalog.example("pseudo-symmetric")
    for order in (GRLEX, LEX, GREVLEX):
        assert frobenius_from_hilbert(P, order) == (2, 6)
    with pytest.raises(PreconditionFailed):
        frobenius_from_hilbert(catalog.example("rf-example"), GRLEX)
    with pytest.raises(PreconditionFailed):
        frobenius_from_hilbert(AffineSemigroup([(1, 0), (0, 1)]), GRLEX)


def test_full_cone_precondition():
    with pytest.raises(StrategyPreconditionFailed):
        k_polynomial(catalog.example("four-generator"), FULL_CONE_IDENTITY)
    with pytest.raises(ValueError):
        k_polynomial(catalog.example("four-generator"), "Nope")


def test_polynomial_arithmetic():
    p = Polynomial({(1, 0): 2, (0, 1): -1})
    q = Polynomial({(0, 1): 1})
    assert (p + q).terms == {(1, 0): 2}
    assert (p * q).terms == {(1, 1): 2, (0, 2): -1}
    one_minus = Polynomial({(0, 0): 1, (1, 0): -1})
    assert (p * one_minus).divide_one_minus(0) == p
    with pytest.raises(ArithmeticError):
        Polynomial({(1, 0): 1}).divide_one_minus(0)
    assert Polynomial.from_json(p.to_json()) == p
    assert Polynomial({(0, 0): 1, (2, 6): -1}).render() == "1 - t1^2*t2^6"
