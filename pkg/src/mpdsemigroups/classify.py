"""Symmetry classes relative to a term order, the extended Wilf inequality, and
quasi-Frobenius elements of simplicial semigroups."""

from dataclasses import dataclass

import numpy as np

from . import grid
from .apery import classical_apery, maximals_by_divisibility
from .core import vsub
from .errors import (
    NoFrobeniusElement,
    NotCSemigroup,
    NotSimplicial,
    PreconditionFailed,
    UncertifiedApery,
    UncertifiedPF,
)
from .gaps import CERTIFIED, gaps, pseudo_frobenius
from .orders import TermOrder

SYMMETRIC = "Symmetric"
PSEUDO_SYMMETRIC = "PseudoSymmetric"
ALMOST_SYMMETRIC = "AlmostSymmetric"
NONE = "None"


@dataclass(frozen=True)
class SymmetryReport:
    order: TermOrder
    frobenius: tuple
    classification: str
    pf: tuple
    gap_count: int
    below_frobenius: int  # |{g ∈ S : g ≤_c F}|
    characterization: bool = None  # pointwise characterization check (C-semigroups)
    counting: bool = None  # counting identity check (full cone only)

    def to_json(self):
        return {
            "order": self.order.to_json(),
            "frobenius": list(self.frobenius),
            "classification": self.classification,
            "pf": [list(f) for f in self.pf],
            "gap_count": self.gap_count,
            "below_frobenius": self.below_frobenius,
            "characterization": self.characterization,
            "counting": self.counting,
        }


def _order(order):
    return TermOrder(order) if isinstance(order, str) else order


def _is_even(v):
    return all(x % 2 == 0 for x in v)


def definitional_class(pf, F):
    """Classification read off ``PF(S)`` and ``F`` alone."""
    pf = set(pf)
    if pf == {F}:
        return SYMMETRIC
    rest = pf - {F}
    if F in pf and rest and all(vsub(F, g) in rest for g in rest):
        if len(pf) == 2:
            return PSEUDO_SYMMETRIC
        return ALMOST_SYMMETRIC
    return NONE


def _below(S, F):
    """``|{g ∈ S : g ≤_c F}|``."""
    shape = tuple(x + 1 for x in F)
    return int(S.table(shape)[tuple(slice(0, s) for s in shape)].sum())


def _characterization(S, F, H, cls):
    """Pointwise check: ``g ∈ S ⟺ F - g ∉ S`` (and ``g ≠ F/2`` when pseudo-symmetric)."""
    # gaps all lie in this box; outside it g ∈ S and F - g ∉ N^d
    box = tuple(max([F[k]] + [h[k] for h in H.elements]) for k in range(S.dimension))
    shape = tuple(x + 1 for x in box)
    member = S.table(shape)[tuple(slice(0, s) for s in shape)]
    cone = grid.cone_mask(S.cone, shape)
    Fshape = tuple(f + 1 for f in F)
    complement = np.zeros(shape, dtype=bool)
    # complement[g] = F - g ∈ S, defined for g ≤ F
    flipped = member[tuple(slice(f, None, -1) if f >= 0 else slice(0, 0) for f in F)]
    complement[tuple(slice(0, s) for s in Fshape)] = flipped
    rhs = ~complement
    if cls == PSEUDO_SYMMETRIC:
        half = tuple(f // 2 for f in F)
        rhs[half] = False
    return bool(((member == rhs) | ~cone).all())


def classify_symmetry(S, order, bound=None):
    """Definitional symmetry class, cross-checked against the characterizations."""
    order = _order(order)
    pf = pseudo_frobenius(S, bound)
    if not pf.certified:
        raise UncertifiedPF("pseudo-Frobenius set is not certified")
    H = gaps(S, bound)
    if not H.certified or not H.elements:
        raise NoFrobeniusElement("the Frobenius element is not certified to exist")
    F = order.max(H.elements)
    cls = definitional_class(pf.elements, F)
    below = _below(S, F)
    char = None
    if cls in (SYMMETRIC, PSEUDO_SYMMETRIC) or len(pf.elements) <= 2:
        # the characterizations cover the symmetric and pseudo-symmetric cases
        want = PSEUDO_SYMMETRIC if len(pf.elements) == 2 else SYMMETRIC
        holds = _characterization(S, F, H, want) and (want != PSEUDO_SYMMETRIC or _is_even(F))
        char = holds == (cls == want)
        assert char, (cls, want, holds)
    counting = None
    if S.cone_is_full_orthant():
        gap_count = len(H.elements)
        half = tuple(f // 2 for f in F)
        sym_count = gap_count == below
        pseudo_count = _is_even(F) and (gap_count - (half in H)) == below
        counting = (cls == SYMMETRIC) == sym_count and (cls == PSEUDO_SYMMETRIC) == pseudo_count
        assert counting, (cls, sym_count, pseudo_count)
    return SymmetryReport(order, F, cls, pf.elements, len(H.elements), below, char, counting)


@dataclass(frozen=True)
class WilfReport:
    frobenius: tuple
    N: int
    sporadic: int  # |{g ∈ S : g ≺ F}|
    embedding_dimension: int
    lhs: int
    holds: bool

    def to_json(self):
        return {
            "frobenius": list(self.frobenius),
            "N": self.N,
            "sporadic": self.sporadic,
            "e": self.embedding_dimension,
            "lhs": self.lhs,
            "holds": self.holds,
        }


def wilf_check(S, order, bound=None):
    """``|{g ∈ S : g ≺ F}| · e(S) ≥ N(F) + 1`` for a C-semigroup and a graded order."""
    order = _order(order)
    if not order.is_graded:
        raise PreconditionFailed("the Wilf check needs a graded term order")
    H = gaps(S, bound)
    if not H.certified or not H.elements:
        raise NotCSemigroup("the gap set is not certified finite and nonempty")
    F = order.max(H.elements)
    deg = sum(F)
    # a graded order puts everything of larger total degree above F
    shape = (deg + 1,) * S.dimension
    member = S.table(shape)[tuple(slice(0, s) for s in shape)]
    fk = order.key(F)
    sporadic = 0
    for g in grid.points(member):
        if sum(g) <= deg and order.key(g) < fk:
            sporadic += 1
    N = len(H.elements) + sporadic
    lhs = sporadic * S.n
    return WilfReport(F, N, sporadic, S.n, lhs, lhs >= N + 1)


@dataclass(frozen=True)
class QFResult:
    elements: tuple
    ray_generators: tuple
    status: str

    def to_json(self):
        return {"qf": [list(x) for x in self.elements], "rays": list(self.ray_generators), "status": self.status}


def simplicial_rays(S):
    """Indices of the ray generators; exactly one generator per extremal ray."""
    rays = S.extremal_rays()
    if len(rays) != S.cone.rank:
        raise NotSimplicial(f"{len(rays)} extremal rays for a cone of rank {S.cone.rank}")
    out = []
    for direction, idxs in rays:
        if len(idxs) != 1:
            raise NotSimplicial(f"ray {direction} carries {len(idxs)} generators")
        out.append(idxs[0])
    return tuple(sorted(out))


def quasi_frobenius(S, bound=None):
    """``{w - sum r_i : w maximal in ∩_i Ap(S, r_i)}`` over the ray generators ``r_i``."""
    idx = simplicial_rays(S)
    rays = [S.generators[i] for i in idx]
    ap = classical_apery(S, rays, bound=tuple(bound) if bound is not None else None)
    if not ap.certified:
        raise UncertifiedApery("Apéry intersection not certified finite within the bound")
    top = maximals_by_divisibility(S, ap.elements)
    shift = tuple(sum(r[k] for r in rays) for k in range(S.dimension))
    return QFResult(tuple(sorted(vsub(w, shift) for w in top)), idx, CERTIFIED)
