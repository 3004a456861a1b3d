"""The defining ideal ``I_S``: Gröbner bases, minimal generators, indispensability.

A Gröbner basis of ``I_S`` is obtained by eliminating ``t`` from the graph ideal
``<x_i - t^{a_i}>`` under a block order with the ``t``-block first. Minimal
generators come from fibers: the factorizations of a degree ``b``, joined when
their supports meet, form ``β_{1,b} + 1`` components, and one binomial per extra
component is needed.
"""

from dataclasses import dataclass

import numpy as np

from . import grid
from .apery import AperyResult, classical_apery
from .core import combination, vsub
from .errors import BinomialNotInIdeal, XNotInSemigroup
from .gaps import CERTIFIED, TRUNCATED
from .groebner import NormalForm, buchberger, reduce_basis
from .orders import GREVLEX, TermOrder

CLASSICAL = "Classical"
STRICT_GAP = "StrictGap"


def _support(u):
    return frozenset(j for j, x in enumerate(u) if x)


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` with disjoint supports and common S-degree ``degree``."""

    plus: tuple
    minus: tuple
    degree: tuple

    @classmethod
    def from_vectors(cls, S, u, v, order=GREVLEX):
        """Cancel common factors and put the ``order``-larger monomial first."""
        u, v = tuple(u), tuple(v)
        c = tuple(min(x, y) for x, y in zip(u, v))
        u = tuple(x - y for x, y in zip(u, c))
        v = tuple(x - y for x, y in zip(v, c))
        if u == v:
            raise ValueError("zero binomial")
        du = combination(u, S.generators)
        dv = combination(v, S.generators)
        if du != dv:
            raise BinomialNotInIdeal(f"monomials have degrees {du} and {dv}")
        if order.key(u) < order.key(v):
            u, v = v, u
        return cls(u, v, du)

    @property
    def support(self):
        return _support(self.plus) | _support(self.minus)

    def canonical(self):
        """Sign-independent identity."""
        return frozenset((self.plus, self.minus))

    def same_up_to_sign(self, other):
        return self.canonical() == other.canonical()

    def render(self, names=None):
        def mono(u):
            parts = []
            for j, k in enumerate(u):
                if k:
                    name = names[j] if names else f"x{j + 1}"
                    parts.append(name + (f"^{k}" if k > 1 else ""))
            return "*".join(parts) if parts else "1"

        return f"{mono(self.plus)} - {mono(self.minus)}"

    def to_json(self):
        return {"plus": list(self.plus), "minus": list(self.minus), "degree": list(self.degree)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["plus"]), tuple(obj["minus"]), tuple(obj["degree"]))

    def __str__(self):
        return self.render()


def _elimination_key(n, order):
    def key(e):
        t = e[n:]
        return (GREVLEX.key(t), order.key(e[:n]))

    return key


def toric_groebner(S, order=GREVLEX):
    """Reduced Gröbner basis of ``I_S`` under ``order`` on the ``x`` variables."""
    if isinstance(order, str):
        order = TermOrder(order)
    n, d = S.n, S.dimension
    graph = []
    for j, a in enumerate(S.generators):
        x = tuple(int(i == j) for i in range(n)) + (0,) * d
        t = (0,) * n + tuple(a)
        graph.append((x, t))
    key = _elimination_key(n, order)
    full = buchberger(graph, key, cancel=True)
    xs = [(lead[:n], trail[:n]) for lead, trail in full if not any(lead[n:]) and not any(trail[n:])]
    reduced = reduce_basis(xs, order.key, cancel=True)
    out = []
    for lead, trail in reduced:
        b = Binomial.from_vectors(S, lead, trail, order)
        assert combination(b.plus, S.generators) == combination(b.minus, S.generators)
        out.append(b)
    return out


@dataclass(frozen=True)
class FiberGraph:
    degree: tuple
    vertices: tuple
    components: tuple  # tuple of tuples of vertex indices

    @property
    def edges(self):
        out = []
        for i, u in enumerate(self.vertices):
            for j in range(i + 1, len(self.vertices)):
                if _support(u) & _support(self.vertices[j]):
                    out.append((i, j))
        return out


def fiber_graph(S, b):
    verts = tuple(S.factorizations(b))
    parent = list(range(len(verts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {}
    for i, u in enumerate(verts):
        for j in _support(u):
            if j in owner:
                ri, rj = find(i), find(owner[j])
                if ri != rj:
                    parent[ri] = rj
            else:
                owner[j] = i
    groups = {}
    for i in range(len(verts)):
        groups.setdefault(find(i), []).append(i)
    comps = tuple(sorted(tuple(g) for g in groups.values()))
    return FiberGraph(tuple(b), verts, comps)


def _degree_key(b):
    return (sum(b), b)


def minimal_generators(S, order=GREVLEX, check=True):
    """A minimal binomial generating set of ``I_S``.

    Candidate degrees are those of the reduced Gröbner basis. In a degree with
    ``k`` fiber components, the largest factorization of the first component is
    joined to the largest factorization of each of the others. With
    ``check`` the count in each degree is compared with ``β_{1,b}``.
    """
    if isinstance(order, str):
        order = TermOrder(order)
    gb = toric_groebner(S, order)
    degrees = sorted({b.degree for b in gb}, key=_degree_key)
    out = []
    for b in degrees:
        fg = fiber_graph(S, b)
        if len(fg.components) < 2:
            continue
        reps = [max((fg.vertices[i] for i in comp), key=order.key) for comp in fg.components]
        reps.sort(key=order.key, reverse=True)
        for r in reps[1:]:
            out.append(Binomial.from_vectors(S, reps[0], r, order))
        if check:
            from .resolution import betti_number

            assert betti_number(S, 1, b) == len(fg.components) - 1
    return out


def betti_one_degrees(S, order=GREVLEX):
    """``{b: β_{1,b}}`` from the fiber graphs at Gröbner-basis degrees."""
    gb = toric_groebner(S, order)
    out = {}
    for b in sorted({g.degree for g in gb}, key=_degree_key):
        k = len(fiber_graph(S, b).components) - 1
        if k:
            out[b] = k
    return out


def same_ideal(S, first, second, order=GREVLEX):
    """Mutual reduction test: each list lies in the ideal generated by the other."""

    def members(gens, probe):
        if not gens:
            return all(b.plus == b.minus for b in probe)
        gb = buchberger([(g.plus, g.minus) for g in gens], order.key, cancel=False)
        nf = NormalForm(gb, order.key)
        return all(nf.contains(b.plus, b.minus) for b in probe)

    return members(first, second) and members(second, first)


@dataclass(frozen=True)
class UFResult:
    elements: tuple
    status: str
    bound: tuple


def uf_complement_minimals(S, bound=None):
    """``min_{≤_S}(S \\ UF(S))``: elements with two or more factorizations, minimal.

    Such an element has pairwise support-disjoint factorizations (otherwise
    removing a shared generator keeps two factorizations), so it is a degree of a
    minimal generator. The default box is twice the componentwise maximum of the
    minimal-generator degrees, which is therefore complete.
    """
    certified_box = None
    if bound is None:
        gens = minimal_generators(S, check=False)
        if not gens:
            return UFResult((), CERTIFIED, None)
        top = tuple(max(g.degree[k] for g in gens) for k in range(S.dimension))
        certified_box = top
        bound = tuple(2 * x for x in top)
    bound = tuple(int(x) for x in bound)
    shape = tuple(x + 1 for x in bound)
    counts = grid.count_table(S.generators, shape, cap=2)
    nuf = counts >= 2
    minimal = nuf.copy()
    for a in S.generators:
        minimal &= ~grid.shifted_down(nuf, a, fill=False)
    pts = grid.points(minimal)
    if certified_box is None:
        gens = minimal_generators(S, check=False)
        certified_box = tuple(max(g.degree[k] for g in gens) for k in range(S.dimension)) if gens else (0,) * S.dimension
    ok = all(x >= y for x, y in zip(bound, certified_box))
    return UFResult(tuple(pts), CERTIFIED if ok else TRUNCATED, bound)


def is_indispensable(S, binomial):
    """True iff the fiber of the degree is exactly ``{plus, minus}`` with disjoint supports."""
    if isinstance(binomial, Binomial):
        u, v = binomial.plus, binomial.minus
    else:
        u, v = binomial
    u, v = tuple(u), tuple(v)
    du, dv = combination(u, S.generators), combination(v, S.generators)
    if du != dv or u == v:
        raise BinomialNotInIdeal(f"monomials have degrees {du} and {dv}")
    if _support(u) & _support(v):
        return False
    fib = set(S.factorizations(du))
    return fib == {u, v}


@dataclass(frozen=True)
class GenericVerdict:
    value: bool
    violations: tuple  # (binomial, reason)

    def __bool__(self):
        return self.value


def is_generic(S, order=GREVLEX):
    """Minimal generators all of full support and all indispensable."""
    full = frozenset(range(S.n))
    bad = []
    for g in minimal_generators(S, order, check=False):
        if g.support != full:
            bad.append((g, "not full support"))
        elif not is_indispensable(S, g):
            bad.append((g, "not indispensable"))
    return GenericVerdict(not bad, tuple(bad))


def apery_set(S, x, variant=CLASSICAL, bound=None):
    """``Ap(S, x)`` for one element or a list of elements (intersection).

    ``Classical``: ``y ∈ S`` with ``y - x ∉ S``. ``StrictGap``: ``y ∈ S`` with
    ``y - x ∈ H(S)``.
    """
    xs = [tuple(x)] if x and isinstance(x[0], int) else [tuple(v) for v in x]
    for v in xs:
        if not any(v) or not S.contains(v):
            raise XNotInSemigroup(f"{v} is not a nonzero element of the semigroup")
    if bound is None:
        bound = tuple(4 * s for s in S.generator_sum)
    res = classical_apery(S, xs, bound=tuple(bound))
    if variant == CLASSICAL:
        return res
    if variant != STRICT_GAP:
        raise ValueError(f"unknown Apéry variant {variant!r}")
    keep = []
    for y in res.elements:
        ok = True
        for v in xs:
            z = vsub(y, v)
            if any(c < 0 for c in z) or not S.cone_contains(z):
                ok = False
                break
        if ok:
            keep.append(y)
    return AperyResult(tuple(keep), res.certified, res.bound)


def _as_array(vectors):
    return np.array(vectors, dtype=np.int64)
