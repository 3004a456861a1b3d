# Symmetry classes for a term order, the Wilf-type inequality, and quasi-Frobenius elements.

from mpdsemigroups import AffineSemigroup, classify_symmetry, quasi_frobenius, wilf_check
from mpdsemigroups.catalog import bresinsky, bresinsky_pf
from mpdsemigroups.gaps import pseudo_frobenius
from mpdsemigroups.orders import GRLEX

for gens in ([(0, 1), (3, 0), (5, 0), (1, 3), (2, 3)],
             [(0, 1), (3, 0), (4, 0), (1, 4), (5, 0), (2, 7)],
             [(0, 1), (2, 0), (3, 0), (1, 3)]):
    S = AffineSemigroup(gens)
    r = classify_symmetry(S, GRLEX)
    w = wilf_check(S, GRLEX)
    print(f"{r.classification:>16}  F={r.frobenius}  |H|={r.gap_count}  N={w.N}  e*sporadic={w.lhs}")

for h in (2, 3, 4):
    S = AffineSemigroup(bresinsky(h))
    qf = quasi_frobenius(S)
    pf = pseudo_frobenius(S)
    print(f"h={h}: PF={pf.elements} (formula {bresinsky_pf(h)}), |QF|={len(qf.elements)}")
