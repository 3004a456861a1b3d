# Gaps, pseudo-Frobenius elements and Frobenius elements of a few planar semigroups.
# Run: python3 demos/01_gaps_and_pseudo_frobenius.py

import numpy as np

from mpdsemigroups import AffineSemigroup, frobenius_element, gaps, pseudo_frobenius
from mpdsemigroups.orders import GREVLEX, GRLEX, LEX

S = AffineSemigroup([(0, 1), (3, 0), (4, 0), (1, 4), (5, 0), (2, 7)])
H = gaps(S)
print("gaps:", H.elements, H.status)

# picture of the box: '#' in S, '.' a gap
box = np.zeros((8, 4), dtype="<U1")
for y in range(8):
    for x in range(4):
        box[y, x] = "#" if S.contains((x, y)) else "."
print("\n".join("".join(row) for row in box[::-1]))

pf = pseudo_frobenius(S)
print("PF:", pf.elements, "via", pf.method)
for order in (LEX, GRLEX, GREVLEX):
    print(order.kind, "Frobenius:", frobenius_element(S, order).element)

# not a C-semigroup: the cone is proper and has infinitely many gaps,
# but PF is still certified through the Apery set of the ray generators
T = AffineSemigroup([(2, 11), (3, 0), (5, 9), (7, 4)])
print(gaps(T).status, pseudo_frobenius(T).elements)

# twelve generators, gap set not certified but PF is
U = AffineSemigroup(list(zip([18, 18, 4, 20, 23, 8, 11, 11, 10, 14, 7, 7], [9, 3, 1, 8, 10, 3, 5, 2, 3, 3, 2, 3])))
print(pseudo_frobenius(U), frobenius_element(U, GRLEX).status)
