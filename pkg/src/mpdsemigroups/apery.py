"""Apéry sets and ray coordinates.

For ``X = {x_1, ..., x_k} ⊆ S`` the (classical) Apéry set
``Ap(S, X) = {w in S : w - x_i not in S for all i}`` is closed under taking
``≤_S``-smaller elements, so it is the connected component of ``0`` in the
graph whose edges add one generator. A breadth-first search from ``0`` therefore
finds it, and terminates exactly when it is finite.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import vadd, vsub
from .errors import NotSimplicial

DEFAULT_MAX_ELEMENTS = 2_000_000


@dataclass(frozen=True)
class AperyResult:
    elements: tuple
    certified: bool
    bound: tuple = None

    @property
    def status(self):
        return "certified" if self.certified else "truncated"


def classical_apery(S, xs, bound=None, max_elements=DEFAULT_MAX_ELEMENTS):
    """``Ap(S, xs)`` by search from ``0``; ``bound`` clips the search box (inclusive)."""
    xs = [tuple(x) for x in xs]
    seen = {(0,) * S.dimension}
    frontier = [(0,) * S.dimension]
    truncated = False
    while frontier:
        nxt = []
        for w in frontier:
            for a in S.generators:
                v = vadd(w, a)
                if v in seen:
                    continue
                if bound is not None and any(c > b for c, b in zip(v, bound)):
                    truncated = True
                    continue
                if any(S.contains(vsub(v, x)) for x in xs):
                    continue
                seen.add(v)
                nxt.append(v)
                if len(seen) >= max_elements:
                    return AperyResult(tuple(sorted(seen)), False, bound)
        frontier = nxt
    return AperyResult(tuple(sorted(seen)), not truncated, bound)


def maximals_by_divisibility(S, elements):
    """Elements ``w`` with ``w + a`` outside the set for every generator ``a``.

    For a ``≤_S``-downward-closed finite set these are its ``≤_S``-maximal elements.
    """
    pool = set(elements)
    return sorted(w for w in pool if not any(vadd(w, a) in pool for a in S.generators))


def ray_generators(S):
    """One generator on each extremal ray (the ``≤``-smallest by coordinate sum).

    Raises :class:`NotSimplicial` unless the number of rays equals the rank of the cone.
    """
    rays = S.extremal_rays()
    if len(rays) != S.cone.rank:
        raise NotSimplicial(f"cone has {len(rays)} extremal rays but rank {S.cone.rank}")
    chosen = []
    for _, idxs in rays:
        chosen.append(min(idxs, key=lambda i: (sum(S.generators[i]), S.generators[i])))
    return chosen


def ray_coordinates(rays, x):
    """Rational ``λ`` with ``x = sum_i λ_i rays[i]``; the rays must be independent."""
    k = len(rays)
    d = len(x)
    # least-squares-free exact solve: row-reduce the d x (k+1) augmented system
    M = [[Fraction(r[row]) for r in rays] + [Fraction(x[row])] for row in range(d)]
    piv_cols = []
    rk = 0
    for c in range(k):
        p = next((i for i in range(rk, d) if M[i][c] != 0), None)
        if p is None:
            continue
        M[rk], M[p] = M[p], M[rk]
        pv = M[rk][c]
        M[rk] = [v / pv for v in M[rk]]
        for i in range(d):
            if i != rk and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rk])]
        piv_cols.append(c)
        rk += 1
    if any(M[i][k] != 0 for i in range(rk, d)):
        raise ValueError(f"{x} is not in the span of the rays")
    lam = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        lam[c] = M[i][k]
    return tuple(lam)
