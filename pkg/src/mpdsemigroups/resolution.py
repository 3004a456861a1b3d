"""Multigraded Betti numbers, MPD detection and the K-polynomial.

``β_{i,b} = dim H̃_{i-1}(Δ_b; Q)`` where the squarefree divisor complex is
``Δ_b = {F ⊆ [n] : b - sum_{j∈F} a_j ∈ S}``. Faces are stored as bitmasks over
the generator indices.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import grid
from .core import vadd, vsub
from .errors import (
    DegreeNotInSemigroup,
    PreconditionFailed,
    SeriesNotStable,
    StrategyPreconditionFailed,
)
from .gaps import frobenius_element, gaps, pseudo_frobenius
from .orders import TermOrder
from .polynomial import Polynomial, one_minus_monomial

BETTI_SUM = "BettiSum"
FULL_CONE_IDENTITY = "FullConeIdentity"
TRUNCATED_SERIES = "TruncatedSeries"
STRATEGIES = (BETTI_SUM, FULL_CONE_IDENTITY, TRUNCATED_SERIES)


@dataclass(frozen=True)
class DivisorComplex:
    degree: tuple
    faces: frozenset  # of bitmasks

    def face_sets(self):
        return sorted(
            (tuple(j for j in range(m.bit_length()) if m >> j & 1) for m in self.faces),
            key=lambda f: (len(f), f),
        )

    def is_closed(self):
        return all(m & ~(1 << j) in self.faces for m in self.faces for j in range(m.bit_length()) if m >> j & 1)


def _subset_sum(gens, mask):
    d = len(gens[0])
    out = [0] * d
    j = 0
    while mask:
        if mask & 1:
            for k in range(d):
                out[k] += gens[j][k]
        mask >>= 1
        j += 1
    return tuple(out)


def divisor_complex(S, b):
    """``Δ_b``, grown size by size so only subsets whose facets are faces are tested."""
    b = tuple(b)
    if not S.contains(b):
        raise DegreeNotInSemigroup(f"{b} is not in the semigroup")
    faces = {0}
    layer = [0]
    n = S.n
    while layer:
        nxt = set()
        for m in layer:
            top = m.bit_length()
            for j in range(top, n):
                cand = m | (1 << j)
                if any(cand & ~(1 << k) not in faces for k in range(j) if cand >> k & 1):
                    continue
                if S.contains(vsub(b, _subset_sum(S.generators, cand))):
                    nxt.add(cand)
        faces.update(nxt)
        layer = sorted(nxt)
    return DivisorComplex(b, frozenset(faces))


def _rank(rows):
    """Exact rank over Q of sparse integer rows (``{col: value}``)."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        piv_row = rows.pop()
        if not piv_row:
            continue
        col = min(piv_row)
        p = piv_row[col]
        rank += 1
        rest = []
        for r in rows:
            c = r.get(col)
            if c:
                new = {}
                for k in set(r) | set(piv_row):
                    v = r.get(k, 0) * p - piv_row.get(k, 0) * c
                    if v:
                        new[k] = v
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
                r = new
            if r:
                rest.append(r)
        rows = rest
    return rank


def _faces_by_size(faces):
    by = {}
    for m in faces:
        by.setdefault(bin(m).count("1"), []).append(m)
    for v in by.values():
        v.sort()
    return by


def _boundary_rank(by, size):
    """Rank of the boundary map from faces of ``size`` to faces of ``size - 1``."""
    if size < 1:
        return 0
    src = by.get(size, [])
    tgt = by.get(size - 1, [])
    if not src or not tgt:
        return 0
    index = {m: i for i, m in enumerate(tgt)}
    rows = []
    for m in src:
        row = {}
        sign = 1
        for j in range(m.bit_length()):
            if m >> j & 1:
                f = m & ~(1 << j)
                if f in index:
                    row[index[f]] = sign
                sign = -sign
        rows.append(row)
    return _rank(rows)


def reduced_homology(faces, q):
    """``dim H̃_q`` of the complex given by face bitmasks (augmented at ``∅``)."""
    by = _faces_by_size(faces)
    size = q + 1
    dim = len(by.get(size, []))
    if dim == 0:
        return 0
    return dim - _boundary_rank(by, size) - _boundary_rank(by, size + 1)


def betti_vector(faces, n):
    """``(β_0, ..., β_{n-1})`` for one divisor complex."""
    by = _faces_by_size(faces)
    ranks = [_boundary_rank(by, s) for s in range(n + 2)]
    out = []
    for i in range(n):
        dim = len(by.get(i, []))
        out.append(dim - ranks[i] - ranks[i + 1] if dim else 0)
    return tuple(out)


def betti_number(S, i, b):
    """``β_{i,b}``."""
    if not 0 <= i <= S.n - 1:
        raise ValueError(f"homological degree {i} outside [0, {S.n - 1}]")
    D = divisor_complex(S, b)
    return reduced_homology(D.faces, i - 1)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers found inside ``box``."""

    degrees: dict  # degree -> tuple of β_i
    box: tuple

    def totals(self):
        n = len(next(iter(self.degrees.values())))
        return tuple(sum(v[i] for v in self.degrees.values()) for i in range(n))

    def support(self, i):
        return sorted(b for b, v in self.degrees.items() if v[i])

    def projective_dimension(self):
        t = self.totals()
        return max(i for i, v in enumerate(t) if v)


def _face_codes(S, box):
    """Per-cell face-set codes over ``[0, box]``: one bit per subset of generators."""
    shape = tuple(x + 1 for x in box)
    member = S.table(shape)[tuple(slice(0, s) for s in shape)]
    n = S.n
    nsub = 1 << n
    words = (nsub + 63) // 64
    codes = np.zeros(shape + (words,), dtype=np.uint64)
    for mask in range(nsub):
        shifted = grid.shifted_down(member, _subset_sum(S.generators, mask), fill=False)
        codes[..., mask // 64] |= shifted.astype(np.uint64) << np.uint64(mask % 64)
    return member, codes


def betti_table(S, box=None):
    """All nonzero ``β_{i,b}`` with ``b`` in ``[0, box]``.

    Cells sharing a divisor complex are grouped, so homology is computed once per
    distinct complex. Defaults to the componentwise maximum of the last-syzygy
    degrees ``f + sum a_i``, ``f ∈ PF(S)``.
    """
    if box is None:
        box = last_syzygy_box(S)
    box = tuple(int(x) for x in box)
    member, codes = _face_codes(S, box)
    flat = codes.reshape(-1, codes.shape[-1])
    keep = member.reshape(-1)
    idx = np.flatnonzero(keep)
    uniq, inverse = np.unique(flat[idx], axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    n = S.n
    out = {}
    for u, row in enumerate(uniq):
        faces = [w * 64 + j for w, word in enumerate(row.tolist()) for j in range(64) if word >> j & 1]
        bv = betti_vector(faces, n)
        if not any(bv):
            continue
        for cell in idx[inverse == u]:
            b = tuple(int(x) for x in np.unravel_index(cell, member.shape))
            out[b] = bv
    return BettiTable(dict(sorted(out.items())), box)


def last_syzygy_box(S, pf=None):
    if pf is None:
        pf = pseudo_frobenius(S)
    if not pf.elements:
        return S.generator_sum
    tops = [vadd(f, S.generator_sum) for f in pf.elements]
    return tuple(max(t[k] for t in tops) for k in range(S.dimension))


@dataclass(frozen=True)
class MPDVerdict:
    value: bool
    status: str
    pf: tuple

    def __bool__(self):
        return self.value


def is_mpd(S, bound=None):
    """``PF(S) ≠ ∅``, with each PF element checked against ``β_{n-1}``."""
    pf = pseudo_frobenius(S, bound)
    for f in pf.elements:
        assert betti_number(S, S.n - 1, vadd(f, S.generator_sum)) >= 1
    return MPDVerdict(bool(pf.elements), pf.status, pf.elements)


def _hilbert_numerator(S, box):
    """``Π(1 - t^{a_i}) · Σ_{s∈S} t^s`` restricted to ``[0, box]`` (exact there)."""
    shape = tuple(x + 1 for x in box)
    member = S.table(shape)[tuple(slice(0, s) for s in shape)]
    acc = member.astype(np.int64)
    for a in S.generators:
        acc = acc - grid.shifted_down(acc, a, fill=0)
    return {
        tuple(int(x) for x in p): int(acc[p])
        for p in zip(*np.nonzero(acc))
    }


def _k_truncated(S, max_growths=5):
    box = S.generator_sum
    prev = None
    for _ in range(max_growths + 1):
        terms = _hilbert_numerator(S, box)
        if prev is not None:
            old_box = prev[0]
            if all(all(x <= b for x, b in zip(e, old_box)) for e in terms):
                return Polynomial(terms, S.dimension)
        prev = (box, terms)
        box = tuple(2 * x for x in box)
    raise SeriesNotStable(f"K-polynomial support still growing at box {prev[0]}")


def _k_betti_sum(S):
    table = betti_table(S)
    terms = {}
    for b, bv in table.degrees.items():
        c = sum((-1) ** i * v for i, v in enumerate(bv))
        if c:
            terms[b] = c
    return Polynomial(terms, S.dimension)


def _k_full_cone(S):
    H = gaps(S)
    if not H.certified or not S.cone_is_full_orthant():
        raise StrategyPreconditionFailed(
            "FullConeIdentity needs a certified gap set and cone(S) ∩ N^d = N^d"
        )
    d = S.dimension
    prod_a = Polynomial.one(d)
    for a in S.generators:
        prod_a = prod_a * one_minus_monomial(a)
    prod_t = Polynomial.one(d)
    for k in range(d):
        prod_t = prod_t * one_minus_monomial(tuple(int(i == k) for i in range(d)))
    gap_series = Polynomial({h: 1 for h in H.elements}, d)
    rhs = prod_a - prod_t * prod_a * gap_series
    for k in range(d):
        rhs = rhs.divide_one_minus(k)
    return rhs


def k_polynomial(S, strategy=TRUNCATED_SERIES):
    """``K(k[S]; t)``, the numerator of the Hilbert series over ``Π(1 - t^{a_i})``."""
    if strategy == BETTI_SUM:
        return _k_betti_sum(S)
    if strategy == FULL_CONE_IDENTITY:
        return _k_full_cone(S)
    if strategy == TRUNCATED_SERIES:
        return _k_truncated(S)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def frobenius_from_hilbert(S, order):
    """``exp(LT≺ K) - sum a_i`` for full-cone C-semigroups."""
    if isinstance(order, str):
        order = TermOrder(order)
    if not S.cone_is_full_orthant():
        raise PreconditionFailed("cone(S) ∩ N^d is not all of N^d")
    H = gaps(S)
    if not H.certified:
        raise PreconditionFailed("gap set is not certified finite")
    if not H.elements:
        raise PreconditionFailed("the gap set is empty")
    K = _k_full_cone(S)
    F = vsub(K.leading_exponent(order), S.generator_sum)
    assert F == frobenius_element(S, order).element
    return F


def betti_degrees_of_size(S, i, box=None):
    """Degrees ``b`` in the box with ``β_{i,b} ≠ 0``."""
    return betti_table(S, box).support(i)


def euler_coefficient(faces):
    """``Σ_{F∈Δ} (-1)^{|F|}``, the alternating Betti sum at one degree."""
    return sum((-1) ** bin(m).count("1") for m in faces)


__all__ = [
    "DivisorComplex",
    "BettiTable",
    "MPDVerdict",
    "divisor_complex",
    "betti_number",
    "betti_table",
    "reduced_homology",
    "is_mpd",
    "k_polynomial",
    "frobenius_from_hilbert",
    "last_syzygy_box",
]
