"""Named semigroups used across tests, demos and the CLI (``--example NAME``)."""

from .core import AffineSemigroup

FOUR_GENERATOR = [(2, 11), (3, 0), (5, 9), (7, 4)]
SYMMETRIC_S1 = [(0, 1), (3, 0), (5, 0), (1, 3), (2, 3)]
SYMMETRIC_S2 = [(0, 1), (2, 0), (3, 0), (1, 3)]
PSEUDO_SYMMETRIC = [(0, 1), (3, 0), (4, 0), (1, 4), (5, 0), (2, 7)]
TWELVE_GENERATOR = list(zip(
    [18, 18, 4, 20, 23, 8, 11, 11, 10, 14, 7, 7],
    [9, 3, 1, 8, 10, 3, 5, 2, 3, 3, 2, 3],
))
RF_EXAMPLE = [(1, 3), (1, 5), (2, 1), (2, 3), (5, 1)]
GENERIC = [(20, 0), (24, 1), (1, 25), (0, 31)]
GLUING = [(0, 9), (18, 0), (27, 0), (9, 18), (8, 8), (10, 10)]
GLUING_PARTITION = ((0, 1, 2, 3), (4, 5))
GLUING_D = (18, 18)


def bresinsky(h):
    """Projective closure of the Bresinsky curve, ``h >= 2``."""
    if h < 2:
        raise ValueError("h must be at least 2")
    n1 = (2 * h - 1) * 2 * h
    n2 = (2 * h - 1) * (2 * h + 1)
    n3 = 2 * h * (2 * h + 1)
    n4 = n3 + 2 * h - 1
    return [(0, n4), (n1, n4 - n1), (n2, n4 - n2), (n3, n4 - n3), (n4, 0)]


def bresinsky_pf(h):
    return (16 * h**3 - 6 * h + 1, 8 * h**2 - 6 * h + 1)


EXAMPLES = {
    "four-generator": FOUR_GENERATOR,
    "symmetric-s1": SYMMETRIC_S1,
    "symmetric-s2": SYMMETRIC_S2,
    "pseudo-symmetric": PSEUDO_SYMMETRIC,
    "twelve-generator": TWELVE_GENERATOR,
    "rf-example": RF_EXAMPLE,
    "generic": GENERIC,
    "gluing": GLUING,
    "bresinsky-2": bresinsky(2),
    "bresinsky-3": bresinsky(3),
}


def example(name):
    try:
        return AffineSemigroup(EXAMPLES[name])
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}") from None
