import pytest

import values as V
from mpdsemigroups import catalog
from mpdsemigroups.core import AffineSemigroup, combination
from mpdsemigroups.errors import BinomialNotInIdeal, XNotInSemigroup
from mpdsemigroups.gaps import CERTIFIED
from mpdsemigroups.groebner import NormalForm, buchberger
from mpdsemigroups.orders import GREVLEX, GRLEX, LEX
from mpdsemigroups.resolution import betti_table
from mpdsemigroups.toric import (
    Binomial,
    apery_set,
    betti_one_degrees,
    fiber_graph,
    is_generic,
    is_indispensable,
    minimal_generators,
    same_ideal,
    toric_groebner,
    uf_complement_minimals,
)


def _canon(texts, n):
    return {V.canonical(V.parse_binomial(t, n)) for t in texts}


def test_minimal_generators_displayed():
    S = catalog.example("four-generator")
    assert {g.canonical() for g in minimal_generators(S)} == _canon(V.FOUR_GEN_IDEAL, 4)
    G = catalog.example("gluing")
    assert {g.canonical() for g in minimal_generators(G)} == _canon(V.GLUING_IDEAL, 6)


@pytest.mark.parametrize("name", ["four-generator", "symmetric-s1", "pseudo-symmetric", "gluing", "rf-example"])
def test_betti_one_two_ways(name):
    S = catalog.example(name)
    homology = {b: v[1] for b, v in betti_table(S).degrees.items() if v[1]}
    assert betti_one_degrees(S) == homology
    assert len(minimal_generators(S)) == sum(homology.values())


@pytest.mark.parametrize("order", [GREVLEX, GRLEX, LEX])
def test_groebner_bases_agree(order):
    S = catalog.example("symmetric-s1")
    gb = toric_groebner(S, order)
    for b in gb:
        assert combination(b.plus, S.generators) == combination(b.minus, S.generators)
        assert order.key(b.plus) > order.key(b.minus)
    # reduced: no leading term divides another term of the basis
    leads = [b.plus for b in gb]
    for b in gb:
        for lead in leads:
            if lead != b.plus:
                assert not all(x <= y for x, y in zip(lead, b.plus))
                assert not all(x <= y for x, y in zip(lead, b.minus))
    assert same_ideal(S, gb, minimal_generators(S))


def test_ideal_membership():
    S = catalog.example("four-generator")
    gb = buchberger([(g.plus, g.minus) for g in minimal_generators(S)], GREVLEX.key)
    nf = NormalForm(gb, GREVLEX.key)
    for u in S.factorizations((120, 120)):
        for v in S.factorizations((120, 120)):
            assert nf.contains(u, v)


def test_binomial():
    S = catalog.example("four-generator")
    b = Binomial.from_vectors(S, (1, 0, 0, 4), (0, 5, 3, 0))
    assert b.plus == (0, 5, 3, 0) and b.degree == (30, 27)
    assert b.render() == "x2^5*x3^3 - x1*x4^4"
    assert Binomial.from_json(b.to_json()) == b
    c = Binomial.from_vectors(S, (1, 1, 0, 4), (0, 6, 3, 0))
    assert c.same_up_to_sign(b)
    with pytest.raises(BinomialNotInIdeal):
        Binomial.from_vectors(S, (1, 0, 0, 0), (0, 1, 0, 0))


def test_fiber_graph():
    S = AffineSemigroup([(2,), (3,)])
    fg = fiber_graph(S, (6,))
    assert set(fg.vertices) == {(3, 0), (0, 2)}
    assert len(fg.components) == 2 and fg.edges == []
    fg = fiber_graph(S, (12,))
    assert len(fg.components) == 1


def test_indispensable_and_generic():
    T = catalog.example("generic")
    gens = minimal_generators(T)
    assert len(gens) == 12
    assert all(is_indispensable(T, g) for g in gens)
    v = is_generic(T)
    assert v.value and not v.violations
    v = is_generic(catalog.example("four-generator"))
    assert not v.value and any(r == "not full support" for _, r in v.violations)
    with pytest.raises(BinomialNotInIdeal):
        is_indispensable(T, ((1, 0, 0, 0), (0, 1, 0, 0)))


def test_uf_complement():
    T = catalog.example("generic")
    res = uf_complement_minimals(T)
    assert res.status == CERTIFIED
    # for a generic ideal these are exactly the minimal-generator degrees
    assert set(res.elements) == {g.degree for g in minimal_generators(T)}
    S = AffineSemigroup([(2,), (3,)])
    assert uf_complement_minimals(S).elements == ((6,),)
    assert uf_complement_minimals(AffineSemigroup([(1, 0), (0, 1)])).elements == ()


def test_apery_sets():
    S = AffineSemigroup([(5,), (7,), (9,)])
    ap = apery_set(S, (5,))
    assert ap.certified
    assert sorted(x[0] for x in ap.elements) == [0, 7, 9, 16, 18]
    strict = apery_set(S, (5,), variant="StrictGap")
    assert 0 not in [x[0] for x in strict.elements]
    with pytest.raises(XNotInSemigroup):
        apery_set(S, (1,))
    with pytest.raises(ValueError):
        apery_set(S, (5,), variant="Other")
    both = apery_set(S, [(5,), (7,)])
    assert set(both.elements) <= set(ap.elements)
