"""Gap sets, C-semigroup detection, pseudo-Frobenius and Frobenius elements.

Certifying a finite gap set
---------------------------
Let ``B`` be a box with ``B >= a_1 + ... + a_n`` componentwise and let ``T`` be
the componentwise maximum of the generators. Suppose every point of
``cone(S) ∩ N^d`` in the shell ``[0, B + T] \\ [0, B]`` lies in ``S``. Then every gap
lies in ``[0, B]``.

Take ``x`` in the cone outside ``[0, B]`` and write ``x = sum λ_i a_i`` with
``λ >= 0``. The point ``y = x - sum floor(λ_i) a_i`` is a nonnegative combination
with coefficients below one, so ``y <= sum a_i <= B``. Adding the generators back
one at a time walks monotonically from ``y`` to ``x``; the first point of the walk
outside ``[0, B]`` exceeds its predecessor by one generator, so it lies in the
shell and hence in ``S``. The rest of the walk adds generators, so ``x ∈ S``.

Certifying pseudo-Frobenius elements without a finite gap set
------------------------------------------------------------
If the cone is simplicial, pick one generator ``r_j`` per extremal ray and let
``A = Ap(S, {r_1, ..., r_k})``, which is finite. For ``f ∈ PF(S)`` write
``f + r_j = w + sum c_i r_i`` with ``w ∈ A``. If ``c_j >= 1`` then ``f ∈ S``, so
``c_j = 0`` and, in ray coordinates, ``λ_j(f) = λ_j(w) - 1``. Hence every
pseudo-Frobenius element lies in the box ``sum_j (M_j - 1) r_j`` where
``M_j = max_{w ∈ A} λ_j(w)``, and a direct search in that box is complete.
"""

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from . import grid
from .apery import classical_apery, ray_coordinates, ray_generators
from .core import leq, vsub
from .errors import (
    BoundTooSmallForCertification,
    EmptyGapSet,
    NotSimplicial,
    RequiresCertifiedPF,
)
from .orders import TermOrder

CERTIFIED = "certified"
TRUNCATED = "truncated"

MAXIMALS_OF_GAPS = "MaximalsOfGaps"
DIRECT_DEFINITION = "DirectDefinition"
LAST_BETTI = "LastBetti"


@dataclass(frozen=True)
class GapSet:
    elements: tuple
    status: str
    bound: tuple = None

    @property
    def certified(self):
        return self.status == CERTIFIED

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return tuple(x) in set(self.elements)

    def to_json(self):
        out = {"gaps": [list(x) for x in self.elements], "status": self.status}
        if self.bound is not None:
            out["bound"] = list(self.bound)
        return out

    @classmethod
    def from_json(cls, obj):
        bound = obj.get("bound")
        return cls(
            tuple(tuple(x) for x in obj["gaps"]),
            obj["status"],
            tuple(bound) if bound is not None else None,
        )


@dataclass(frozen=True)
class PFSet:
    elements: tuple
    method: str
    status: str
    bound: tuple = None

    @property
    def certified(self):
        return self.status == CERTIFIED

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return tuple(x) in set(self.elements)

    def to_json(self):
        out = {"pf": [list(x) for x in self.elements], "status": self.status, "method": self.method}
        if self.bound is not None:
            out["bound"] = list(self.bound)
        return out

    @classmethod
    def from_json(cls, obj):
        bound = obj.get("bound")
        return cls(
            tuple(tuple(x) for x in obj["pf"]),
            obj.get("method", DIRECT_DEFINITION),
            obj["status"],
            tuple(bound) if bound is not None else None,
        )


@dataclass(frozen=True)
class CVerdict:
    """Outcome of the C-semigroup test.

    ``value`` is true only for a certified nonempty finite gap set. ``finite`` is
    true when finiteness was certified (including the empty case).
    """

    value: bool
    finite: bool
    empty: bool
    status: str
    gap_count: int = field(default=None)

    def __bool__(self):
        return self.value


def default_gap_limit(S):
    """Largest inner box tried by the certification loop."""
    return tuple(
        max(10 * m, 2 * s) for m, s in zip(S.generator_max, S.generator_sum)
    )


def _box_slices(upper):
    return tuple(slice(0, u + 1) for u in upper)


def _tables(S, upper):
    """Membership and cone masks over ``[0, upper]`` inclusive."""
    shape = tuple(u + 1 for u in upper)
    member = S.table(shape)[tuple(slice(0, s) for s in shape)]
    cone = grid.cone_mask(S.cone, shape)
    return member, cone


@functools.lru_cache(maxsize=64)
def _scan(S, limit):
    """Run the shell certification; returns ``(inner box, gap mask, certified)``."""
    T = S.generator_max
    B = tuple(max(1, s) if t else 0 for s, t in zip(S.generator_sum, T))
    B = tuple(min(b, l) for b, l in zip(B, limit))
    while True:
        outer = tuple(b + t for b, t in zip(B, T))
        if grid.cells(tuple(o + 1 for o in outer)) > S.cell_limit:
            break
        member, cone = _tables(S, outer)
        holes = cone & ~member
        inner = np.zeros(member.shape, dtype=bool)
        inner[_box_slices(B)] = True
        sound = all(b >= s for b, s in zip(B, S.generator_sum))
        if sound and not (holes & ~inner).any():
            return B, holes[_box_slices(B)].copy(), True
        if all(b >= l for b, l in zip(B, limit)):
            return B, holes[_box_slices(B)].copy(), False
        B = tuple(min(max(2 * b, 1) if t else 0, l) for b, t, l in zip(B, T, limit))
    # box too large for a dense table: report what fits
    B = tuple(min(b, l) for b, l in zip(B, limit))
    while grid.cells(tuple(b + t + 1 for b, t in zip(B, T))) > S.cell_limit:
        B = tuple(b // 2 for b in B)
    member, cone = _tables(S, B)
    return B, (cone & ~member), False


def _limit(S, bound):
    if bound is None:
        return default_gap_limit(S)
    bound = tuple(int(b) for b in bound)
    if len(bound) != S.dimension:
        raise ValueError("bound has the wrong dimension")
    return bound


def gaps(S, bound=None, certify=False):
    """``H(S)``, either certified complete or truncated to the box ``[0, bound]``.

    ``bound`` caps the inner certification box; when omitted the search tries
    boxes up to :func:`default_gap_limit`.
    """
    B, mask, ok = _scan(S, _limit(S, bound))
    if not ok and certify:
        raise BoundTooSmallForCertification(
            f"gap set not certified finite within the box {B}"
        )
    return GapSet(tuple(grid.points(mask)), CERTIFIED if ok else TRUNCATED, None if ok else B)


def is_c_semigroup(S, bound=None):
    g = gaps(S, bound)
    if g.certified:
        return CVerdict(len(g) > 0, True, len(g) == 0, CERTIFIED, len(g))
    return CVerdict(False, False, False, TRUNCATED, None)


def maximals(S, vectors):
    """Maximal elements under ``x ≤_S y ⟺ y - x ∈ S``.

    ``x <_S y`` forces ``x < y`` componentwise, so scanning in decreasing lex
    order meets every dominating element first; checking against the maximal
    elements found so far suffices by transitivity.
    """
    out = []
    for x in sorted(set(vectors), reverse=True):
        if not any(leq(x, y) and S.contains(vsub(y, x)) for y in out):
            out.append(x)
    return sorted(out)


def _direct_pf_mask(S, upper, member, cone):
    """PF mask over ``[0, upper]``; ``member``/``cone`` must cover ``upper + T``."""
    box = _box_slices(upper)
    mask = cone[box] & ~member[box]
    for a in S.generators:
        shifted = grid.shifted_up(member, a, fill=False)
        mask &= shifted[box]
    return mask


def _verify_pf(S, f):
    return (
        not S.contains(f)
        and S.cone_contains(f)
        and all(S.contains(tuple(x + y for x, y in zip(f, a))) for a in S.generators)
    )


def _pf_in_box(S, upper):
    T = S.generator_max
    outer = tuple(u + t for u, t in zip(upper, T))
    member, cone = _tables(S, outer)
    found = grid.points(_direct_pf_mask(S, upper, member, cone))
    for f in found:
        assert _verify_pf(S, f)
    return found


def apery_pf_box(S):
    """Box containing every pseudo-Frobenius element, or ``None`` if unavailable."""
    try:
        idx = ray_generators(S)
    except NotSimplicial:
        return None
    rays = [S.generators[i] for i in idx]
    ap = classical_apery(S, rays)
    if not ap.certified:
        return None
    M = [max(ray_coordinates(rays, w)[j] for w in ap.elements) for j in range(len(rays))]
    upper = [0] * S.dimension
    for m, r in zip(M, rays):
        c = max(math.ceil(m - 1), 0)
        for k in range(S.dimension):
            upper[k] += c * r[k]
    return tuple(upper)


@functools.lru_cache(maxsize=64)
def _pseudo_frobenius(S, bound, bound_scale):
    limit = _limit(S, bound)
    B, mask, ok = _scan(S, limit)
    if ok:
        H = grid.points(mask)
        pf = maximals(S, H)
        direct = _pf_in_box(S, B)
        assert pf == direct, (pf, direct)
        return PFSet(tuple(pf), MAXIMALS_OF_GAPS, CERTIFIED)
    box = apery_pf_box(S)
    if box is not None and grid.cells(tuple(b + t + 1 for b, t in zip(box, S.generator_max))) <= S.cell_limit:
        return PFSet(tuple(_pf_in_box(S, box)), DIRECT_DEFINITION, CERTIFIED)
    if bound is not None:
        upper = limit
    else:
        upper = tuple(bound_scale * s for s in S.generator_sum)
    while grid.cells(tuple(u + t + 1 for u, t in zip(upper, S.generator_max))) > S.cell_limit:
        upper = tuple(u // 2 for u in upper)
    return PFSet(tuple(_pf_in_box(S, upper)), DIRECT_DEFINITION, TRUNCATED, upper)


def pseudo_frobenius(S, bound=None, bound_scale=2):
    """``PF(S)``.

    Certified when the gap set is certified finite (computed as its maximal
    elements and cross-checked against the definition) or when the cone is
    simplicial (direct search in the box derived from the ray Apéry set).
    Otherwise a direct search in ``[0, bound]`` or ``[0, bound_scale * sum a_i]``,
    reported as truncated.
    """
    if bound is not None:
        bound = tuple(int(b) for b in bound)
    return _pseudo_frobenius(S, bound, bound_scale)


@dataclass(frozen=True)
class FrobeniusResult:
    element: tuple
    status: str
    order: TermOrder

    @property
    def certified(self):
        return self.status == CERTIFIED

    def to_json(self):
        return {
            "frobenius": list(self.element) if self.element is not None else None,
            "status": self.status,
            "order": self.order.to_json(),
        }


def frobenius_element(S, order, bound=None):
    """``max≺ H(S)``; certified only when the gap set is."""
    if isinstance(order, str):
        order = TermOrder(order)
    H = gaps(S, bound)
    if not H.elements:
        if H.certified:
            raise EmptyGapSet("the gap set is empty")
        return FrobeniusResult(None, TRUNCATED, order)
    F = order.max(H.elements)
    if H.certified:
        assert F in pseudo_frobenius(S, bound).elements
    return FrobeniusResult(F, H.status, order)


def dominated_by_pf(S, x, pf):
    """True iff ``f - x ∈ S`` for some ``f`` in ``pf``."""
    if not pf.certified:
        raise RequiresCertifiedPF("dominated_by_pf needs a certified PF set")
    x = tuple(x)
    return any(S.contains(vsub(f, x)) for f in pf.elements)
