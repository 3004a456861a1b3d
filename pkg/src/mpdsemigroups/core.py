"""Affine semigroups: construction, membership, cone membership, factorizations."""

import threading
from dataclasses import dataclass

from . import grid
from .cone import extremal_rays, fourier_motzkin
from .errors import (
    DimensionMismatch,
    EmptyGenerators,
    NegativeCoordinate,
    NonMinimalGeneratingSet,
    ParseError,
    ZeroGenerator,
)
from .lattice import hnf, in_lattice


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(k, u):
    return tuple(k * a for a in u)


def leq(u, v):
    """Componentwise ``u <= v``."""
    return all(a <= b for a, b in zip(u, v))


def combination(exponents, generators):
    """``sum_j exponents[j] * generators[j]``."""
    d = len(generators[0])
    out = [0] * d
    for m, a in zip(exponents, generators):
        if m:
            for k in range(d):
                out[k] += m * a[k]
    return tuple(out)


def _as_vector(v, d=None):
    try:
        vec = tuple(int(x) for x in v)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"not an integer vector: {v!r}") from exc
    for x, y in zip(vec, v):
        if x != y:
            raise ParseError(f"not an integer vector: {v!r}")
    if d is not None and len(vec) != d:
        raise DimensionMismatch(f"vector {vec} has length {len(vec)}, expected {d}")
    return vec


@dataclass(frozen=True)
class Factorization:
    """An exponent vector ``m`` together with the degree ``sum_j m_j a_j``."""

    exponents: tuple
    degree: tuple

    def verify(self, semigroup):
        return combination(self.exponents, semigroup.generators) == self.degree


class AffineSemigroup:
    """A finitely generated submonoid of ``N^d`` given by its minimal generators.

    The cone facets and the Hermite basis of the group are computed once at
    construction. Membership queries are answered from a lazily grown boolean
    table over a box (see :mod:`mpdsemigroups.grid`) or, for points whose box
    would be too large, by depth-first search.
    """

    def __init__(self, generators, check_minimal=True, cell_limit=grid.DEFAULT_CELL_LIMIT):
        gens = list(generators)
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        first = _as_vector(gens[0])
        d = len(first)
        if d == 0:
            raise DimensionMismatch("generators must have positive length")
        vecs = [_as_vector(g, d) for g in gens]
        for v in vecs:
            if any(x < 0 for x in v):
                raise NegativeCoordinate(f"generator {v} has a negative coordinate")
            if not any(v):
                raise ZeroGenerator("the zero vector cannot be a generator")
        self.generators = tuple(vecs)
        self.n = len(vecs)
        self.dimension = d
        self.cell_limit = cell_limit
        self._lock = threading.Lock()
        self._table = None
        self._suffix_cones = {}
        if check_minimal:
            self._check_minimal()
        self.cone = fourier_motzkin(self.generators)
        self.group_basis = tuple(hnf(self.generators))
        self.generator_sum = tuple(sum(a[k] for a in self.generators) for k in range(d))
        self.generator_max = tuple(max(a[k] for a in self.generators) for k in range(d))

    def __repr__(self):
        return f"AffineSemigroup({list(self.generators)!r})"

    def __eq__(self, other):
        return isinstance(other, AffineSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return self.n

    def _check_minimal(self):
        seen = {}
        for i, a in enumerate(self.generators):
            if a in seen:
                raise NonMinimalGeneratingSet(
                    f"generator {a} is repeated", generator=a, index=i
                )
            seen[a] = i
        for i, a in enumerate(self.generators):
            others = [b for j, b in enumerate(self.generators) if j != i and leq(b, a)]
            if not others:
                continue
            table = grid.membership_table(others, tuple(x + 1 for x in a))
            if table[a]:
                raise NonMinimalGeneratingSet(
                    f"generator {a} lies in the monoid generated by the others",
                    generator=a,
                    index=i,
                )

    # -- geometry -----------------------------------------------------------

    def cone_contains(self, b):
        """True iff ``b`` lies in the rational cone spanned by the generators."""
        return self.cone.contains(_as_vector(b, self.dimension))

    def in_group(self, b):
        """True iff ``b`` lies in the group ``G(S)`` generated by ``S``."""
        return in_lattice(self.group_basis, _as_vector(b, self.dimension))

    @property
    def group_rank(self):
        return len(self.group_basis)

    def extremal_rays(self):
        return extremal_rays(self.cone, self.generators)

    def cone_is_full_orthant(self):
        """True iff ``cone(S) ∩ N^d = N^d``, i.e. every unit vector is in the cone."""
        d = self.dimension
        return all(self.cone.contains(tuple(int(i == k) for i in range(d))) for k in range(d))

    def _suffix_cone(self, j):
        c = self._suffix_cones.get(j)
        if c is None:
            c = fourier_motzkin(self.generators[j:])
            self._suffix_cones[j] = c
        return c

    # -- membership ---------------------------------------------------------

    def table(self, shape):
        """Membership table covering at least the box ``[0, shape)``.

        The returned array may be larger than requested; slice it if needed.
        """
        shape = tuple(int(s) for s in shape)
        with self._lock:
            t = self._table
            if t is not None and all(a <= b for a, b in zip(shape, t.shape)):
                return t
            if t is not None:
                grown = tuple(max(a, min(2 * b, max(a, 2 * b))) for a, b in zip(shape, t.shape))
                if grid.cells(grown) > self.cell_limit:
                    grown = tuple(max(a, b) for a, b in zip(shape, t.shape))
                shape = grown
            self._table = grid.membership_table(self.generators, shape)
            return self._table

    def contains(self, b):
        """True iff ``b`` is in ``S``. Negative coordinates return ``False``."""
        b = _as_vector(b, self.dimension)
        if any(x < 0 for x in b):
            return False
        if not any(b):
            return True
        if not self.cone.contains(b) or not self.in_group(b):
            return False
        t = self._table
        if t is not None and all(x < s for x, s in zip(b, t.shape)):
            return bool(t[b])
        need = tuple(x + 1 for x in b)
        if t is not None:
            need = tuple(max(x, s) for x, s in zip(need, t.shape))
        if grid.cells(need) <= self.cell_limit:
            return bool(self.table(need)[b])
        return next(self._dfs(b), None) is not None

    __contains__ = contains

    def contains_many(self, points):
        return [self.contains(p) for p in points]

    # -- factorizations -----------------------------------------------------

    def _dfs(self, b):
        gens = self.generators
        n = self.n
        m = [0] * n

        def rec(j, rest):
            if j == n - 1:
                a = gens[j]
                k = None
                for x, y in zip(rest, a):
                    if y == 0:
                        if x != 0:
                            return
                    else:
                        if x % y:
                            return
                        q = x // y
                        if k is None:
                            k = q
                        elif k != q:
                            return
                m[j] = k if k is not None else 0
                yield tuple(m)
                m[j] = 0
                return
            a = gens[j]
            bound = min(x // y for x, y in zip(rest, a) if y > 0)
            cone = self._suffix_cone(j + 1)
            for k in range(bound, -1, -1):
                r = tuple(x - k * y for x, y in zip(rest, a))
                if not any(r):
                    m[j] = k
                    out = tuple(m)
                    m[j] = 0
                    yield out
                    continue
                if not cone.contains(r):
                    continue
                m[j] = k
                yield from rec(j + 1, r)
            m[j] = 0

        if not any(b):
            yield (0,) * n
            return
        yield from rec(0, b)

    def factorizations(self, b):
        """All exponent vectors ``m`` in ``N^n`` with ``sum_j m_j a_j = b``.

        The search visits generators in input order and, for each, tries the
        largest multiplicity first; the returned list follows that order.
        """
        b = _as_vector(b, self.dimension)
        if any(x < 0 for x in b) or not self.cone.contains(b) or not self.in_group(b):
            return []
        return list(self._dfs(b))

    def count_factorizations(self, b, cap=None):
        count = 0
        for _ in self.factorizations(b):
            count += 1
            if cap is not None and count >= cap:
                break
        return count

    # -- derived semigroups -------------------------------------------------

    def submonoid(self, indices):
        """The semigroup generated by the generators at ``indices`` (in order)."""
        return AffineSemigroup(
            [self.generators[i] for i in indices], check_minimal=False, cell_limit=self.cell_limit
        )

    def to_json(self):
        return {"generators": [list(a) for a in self.generators]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, dict):
            obj = obj.get("generators")
        if not isinstance(obj, list):
            raise ParseError("semigroup document needs a 'generators' list")
        return cls(obj)


def new_semigroup(generators, check_minimal=True):
    """Validate ``generators`` and build an :class:`AffineSemigroup`."""
    return AffineSemigroup(generators, check_minimal=check_minimal)


def factorizations(semigroup, b):
    return semigroup.factorizations(b)


def contains(semigroup, b):
    return semigroup.contains(b)


def cone_contains(semigroup, b):
    return semigroup.cone_contains(b)


def group_rank(semigroup):
    return semigroup.group_rank
