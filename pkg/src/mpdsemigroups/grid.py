"""Dense boolean / counting tables of a semigroup over a box ``[0, shape)``.

Every generator has nonnegative coordinates, so the part of ``S`` inside a box
is obtained by closing ``{0}`` under ``+a_1``, then ``+a_2`` and so on, each
closure clipped to the box. A single closure is done by doubling:
``T |= T + a``, ``T |= T + 2a``, ``T |= T + 4a``, ... which covers every
multiple ``k a`` that fits. The same product ``prod_m (1 + t^(2^m a))`` gives
factorization counts, kept exact up to a saturation cap.
"""

import numpy as np

# cells; above this the callers fall back to search
DEFAULT_CELL_LIMIT = 60_000_000


def cells(shape):
    out = 1
    for s in shape:
        out *= int(s)
    return out


def _shift_slices(shape, step):
    dst = tuple(slice(s, None) for s in step)
    src = tuple(slice(0, n - s) for n, s in zip(shape, step))
    return dst, src


def _fits(shape, step):
    return all(s < n for s, n in zip(step, shape))


def membership_table(generators, shape):
    """Boolean array ``T`` with ``T[x]`` true iff ``x`` is in the monoid."""
    shape = tuple(int(s) for s in shape)
    table = np.zeros(shape, dtype=bool)
    table[(0,) * len(shape)] = True
    for a in generators:
        step = tuple(int(x) for x in a)
        while _fits(shape, step):
            dst, src = _shift_slices(shape, step)
            table[dst] |= table[src]
            step = tuple(2 * x for x in step)
    return table


def count_table(generators, shape, cap=2):
    """Number of factorizations of each point of the box, saturated at ``cap``."""
    if cap > 30000:
        raise ValueError("cap too large for uint16 storage")
    shape = tuple(int(s) for s in shape)
    counts = np.zeros(shape, dtype=np.uint16)
    counts[(0,) * len(shape)] = 1
    for a in generators:
        step = tuple(int(x) for x in a)
        while _fits(shape, step):
            dst, src = _shift_slices(shape, step)
            block = counts[dst] + counts[src]
            np.minimum(block, cap, out=block)
            counts[dst] = block
            step = tuple(2 * x for x in step)
    return counts


def coordinate_grids(shape):
    """Broadcastable integer coordinate arrays for a box."""
    d = len(shape)
    grids = []
    for k, n in enumerate(shape):
        view = [1] * d
        view[k] = int(n)
        grids.append(np.arange(int(n), dtype=np.int64).reshape(view))
    return grids


def cone_mask(cone, shape):
    """Boolean array of the box points lying in the cone."""
    shape = tuple(int(s) for s in shape)
    grids = coordinate_grids(shape)
    mask = np.ones(shape, dtype=bool)
    for normal, is_eq in [(e, True) for e in cone.equalities] + [(f, False) for f in cone.facets]:
        val = np.zeros((1,) * len(shape), dtype=np.int64)
        for c, g in zip(normal, grids):
            if c:
                val = val + int(c) * g
        mask &= (val == 0) if is_eq else (val >= 0)
    return mask


def lattice_mask(basis, shape):
    """Boolean array of the box points lying in the lattice spanned by ``basis``.

    ``basis`` must be in row Hermite normal form.
    """
    shape = tuple(int(s) for s in shape)
    d = len(shape)
    grids = coordinate_grids(shape)
    residual = [np.broadcast_to(g, shape).astype(np.int64) for g in grids]
    mask = np.ones(shape, dtype=bool)
    for row in basis:
        c = next(i for i, x in enumerate(row) if x)
        p = int(row[c])
        mask &= residual[c] % p == 0
        q = residual[c] // p
        for k in range(d):
            if row[k]:
                residual[k] = residual[k] - q * int(row[k])
    for k in range(d):
        mask &= residual[k] == 0
    return mask


def shifted_up(table, vec, fill=False):
    """Array ``B`` with ``B[x] = table[x + vec]`` where defined, ``fill`` elsewhere."""
    shape = table.shape
    out = np.full(shape, fill, dtype=table.dtype)
    vec = tuple(int(v) for v in vec)
    if not _fits(shape, vec):
        return out
    src = tuple(slice(v, None) for v in vec)
    dst = tuple(slice(0, n - v) for n, v in zip(shape, vec))
    out[dst] = table[src]
    return out


def shifted_down(table, vec, fill=False):
    """Array ``B`` with ``B[x] = table[x - vec]`` where ``x - vec >= 0``, ``fill`` elsewhere."""
    shape = table.shape
    out = np.full(shape, fill, dtype=table.dtype)
    vec = tuple(int(v) for v in vec)
    if not _fits(shape, vec):
        return out
    dst, src = _shift_slices(shape, vec)
    out[dst] = table[src]
    return out


def points(mask):
    """Sorted list of integer tuples where ``mask`` is true (lex order)."""
    return [tuple(int(x) for x in p) for p in np.argwhere(mask)]
