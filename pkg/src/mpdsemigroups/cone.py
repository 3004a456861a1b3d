"""H-representation of the rational cone spanned by a list of integer vectors.

The facets are obtained by exact Fourier-Motzkin elimination of the multipliers
in ``x = sum_i lambda_i a_i, lambda >= 0``, with Chernikov's history rule to keep
the intermediate systems small, followed by a facet filter that keeps only
inequalities tight on a codimension-one set of generators.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .lattice import hnf, primitive, rank


def _integral(coeffs):
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    return primitive(tuple(int(Fraction(c) * den) for c in coeffs))


def _normalize(vec):
    # primitive integer representative with the same sign
    return _integral(vec)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class ConeDescription:
    """``cone = {x : E x = 0, F x >= 0}`` with ``F`` the facet normals."""

    dimension: int
    equalities: tuple
    facets: tuple
    rank: int

    def contains(self, x):
        return all(_dot(e, x) == 0 for e in self.equalities) and all(
            _dot(f, x) >= 0 for f in self.facets
        )

    def interior_contains(self, x):
        return all(_dot(e, x) == 0 for e in self.equalities) and all(
            _dot(f, x) > 0 for f in self.facets
        )


def fourier_motzkin(generators):
    """Compute the :class:`ConeDescription` of ``cone(generators)``."""
    gens = [tuple(g) for g in generators]
    d = len(gens[0])
    n = len(gens)
    r = rank(gens)

    # RREF of [A | -I] acting on (lambda, x); A has the generators as columns.
    rows = []
    for k in range(d):
        rows.append([Fraction(g[k]) for g in gens] + [Fraction(-int(k == j)) for j in range(d)])
    pivots = []
    rk = 0
    for c in range(n):
        p = next((i for i in range(rk, d) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        pv = rows[rk][c]
        rows[rk] = [v / pv for v in rows[rk]]
        for i in range(d):
            if i != rk and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        pivots.append(c)
        rk += 1
        if rk == d:
            break

    equalities = []
    for row in rows[rk:]:
        xpart = row[n:]
        if any(xpart):
            equalities.append(_normalize(xpart))

    free = [c for c in range(n) if c not in pivots]
    # inequalities over (free lambdas..., x...)
    ineqs = []
    for i, c in enumerate(pivots):
        row = rows[i]
        # lambda_c + sum_free row[f] lambda_f + row[x] . x = 0
        vec = [-row[f] for f in free] + [-v for v in row[n:]]
        ineqs.append(vec)
    for j, _ in enumerate(free):
        vec = [Fraction(0)] * (len(free) + d)
        vec[j] = Fraction(1)
        ineqs.append(vec)

    system = {}
    for idx, v in enumerate(ineqs):
        key = _normalize(v)
        if any(key):
            system.setdefault(key, frozenset([idx]))

    for step in range(len(free)):
        pos, neg, zero = [], [], []
        for vec, hist in system.items():
            if vec[step] > 0:
                pos.append((vec, hist))
            elif vec[step] < 0:
                neg.append((vec, hist))
            else:
                zero.append((vec, hist))
        new = {}
        for vec, hist in zero:
            new[vec] = hist
        for pv, ph in pos:
            for nv, nh in neg:
                hist = ph | nh
                if len(hist) > step + 2:
                    continue
                comb = tuple(a * -nv[step] + b * pv[step] for a, b in zip(pv, nv))
                key = _normalize(comb)
                if not any(key):
                    continue
                old = new.get(key)
                if old is None or len(hist) < len(old):
                    new[key] = hist
        system = new

    offset = len(free)
    candidates = {v[offset:] for v in system}
    eq_basis = hnf(equalities) if equalities else []

    facets = []
    seen_tight = set()
    for c in sorted(candidates):
        if not any(c):
            continue
        vals = [_dot(c, g) for g in gens]
        if any(v < 0 for v in vals):
            continue
        if all(v == 0 for v in vals):
            continue
        tight = frozenset(i for i, v in enumerate(vals) if v == 0)
        if rank([gens[i] for i in tight]) != r - 1:
            continue
        if tight in seen_tight:
            continue
        seen_tight.add(tight)
        facets.append(c)

    return ConeDescription(
        dimension=d, equalities=tuple(eq_basis), facets=tuple(facets), rank=r
    )


def extremal_rays(description, generators):
    """Group generators by extremal ray of their cone.

    Returns a list of ``(direction, [generator indices])`` where ``direction`` is
    the primitive integer vector spanning the ray.
    """
    gens = [tuple(g) for g in generators]
    d = description.dimension
    r = description.rank
    groups = {}
    for i, g in enumerate(gens):
        groups.setdefault(primitive(g), []).append(i)
    rays = []
    for direction, idxs in groups.items():
        if r == 1:
            rays.append((direction, idxs))
            continue
        tight = [f for f in description.facets if _dot(f, direction) == 0]
        if rank(list(description.equalities) + tight) == d - 1:
            rays.append((direction, idxs))
    return sorted(rays)
