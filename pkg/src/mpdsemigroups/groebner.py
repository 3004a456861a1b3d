"""Buchberger's algorithm for pure-difference binomial ideals.

Elements are pairs ``(lead, trail)`` of exponent tuples meaning
``x^lead - x^trail`` with ``lead`` larger under the term order. S-polynomials and
reductions of such binomials are again such binomials, and the normal form of a
monomial is a single monomial, so ``x^u - x^v`` lies in the ideal iff ``u`` and
``v`` have the same normal form.

When the ideal is known to be saturated with respect to every variable (for
example a prime toric ideal, or the graph ideal used for elimination), common
monomial factors are cancelled; otherwise they are kept.
"""

import heapq
from itertools import count


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class BinomialBasis:
    def __init__(self, key, cancel):
        self.key = key
        self.cancel = cancel
        self.elems = []

    def orient(self, u, v):
        if u == v:
            return None
        if self.cancel:
            c = tuple(min(x, y) for x, y in zip(u, v))
            if any(c):
                u = tuple(x - y for x, y in zip(u, c))
                v = tuple(x - y for x, y in zip(v, c))
        return (u, v) if self.key(u) > self.key(v) else (v, u)

    def nf(self, m, elems=None):
        """Normal form of the monomial ``x^m``."""
        elems = self.elems if elems is None else elems
        m = tuple(m)
        changed = True
        while changed:
            changed = False
            for lead, trail in elems:
                if _divides(lead, m):
                    disjoint = all(not (x and y) for x, y in zip(lead, trail))
                    if disjoint:
                        k = min(y // x for x, y in zip(lead, m) if x)
                    else:
                        k = 1
                    m = tuple(y - k * x + k * t for x, y, t in zip(lead, m, trail))
                    changed = True
                    break
        return m


def buchberger(binomials, key, cancel=False):
    """Gröbner basis (list of ``(lead, trail)``) of the ideal spanned by ``binomials``.

    ``binomials`` is an iterable of exponent pairs ``(u, v)``; ``key`` maps an
    exponent tuple to a sort key of a term order.
    """
    B = BinomialBasis(key, cancel)
    pending = {}
    heap = []
    tick = count()

    def add(elem):
        j = len(B.elems)
        B.elems.append(elem)
        for i in range(j):
            li = B.elems[i][0]
            L = _lcm(li, elem[0])
            heapq.heappush(heap, (key(L), next(tick), i, j))
            pending[(i, j)] = L

    for u, v in binomials:
        o = B.orient(tuple(u), tuple(v))
        if o is None:
            continue
        nu, nv = B.nf(o[0]), B.nf(o[1])
        o = B.orient(nu, nv)
        if o is not None:
            add(o)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        L = pending.pop((i, j))
        (li, ti), (lj, tj) = B.elems[i], B.elems[j]
        if all(not (x and y) for x, y in zip(li, lj)):
            continue
        if _chain(B.elems, pending, i, j, L):
            continue
        a = tuple(l - x + t for l, x, t in zip(L, li, ti))
        b = tuple(l - x + t for l, x, t in zip(L, lj, tj))
        o = B.orient(B.nf(a), B.nf(b))
        if o is not None:
            add(o)
    return B.elems


def _chain(elems, pending, i, j, L):
    for k, (lk, _) in enumerate(elems):
        if k == i or k == j:
            continue
        if not _divides(lk, L):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def reduce_basis(elems, key, cancel=False):
    """Reduced Gröbner basis from any Gröbner basis."""
    B = BinomialBasis(key, cancel)
    elems = sorted(set(elems), key=lambda e: key(e[0]))
    minimal = []
    for e in elems:
        if not any(_divides(f[0], e[0]) for f in minimal):
            minimal.append(e)
    out = []
    for lead, trail in minimal:
        trail = B.nf(trail, minimal)
        o = B.orient(lead, trail)
        if o is not None:
            out.append(o)
    return sorted(out, key=lambda e: key(e[0]))


class NormalForm:
    """Ideal-membership oracle for binomials backed by a Gröbner basis."""

    def __init__(self, basis, key, cancel=False):
        self._B = BinomialBasis(key, cancel)
        self._B.elems = list(basis)

    def monomial(self, m):
        return self._B.nf(m)

    def contains(self, u, v):
        return self._B.nf(u) == self._B.nf(v)
