# Multigraded Betti numbers from squarefree divisor complexes, and the K-polynomial.

from mpdsemigroups import AffineSemigroup, betti_table, frobenius_from_hilbert, k_polynomial
from mpdsemigroups.orders import GRLEX

S = AffineSemigroup([(2, 11), (3, 0), (5, 9), (7, 4)])
t = betti_table(S)
print("total Betti numbers:", t.totals())
for i in range(1, 4):
    print(f"  beta_{i} degrees:", t.support(i))
# depth 1: the last syzygies sit at f + sum a_i for f in PF(S)
print("sum a_i =", S.generator_sum)

S2 = AffineSemigroup([(0, 1), (2, 0), (3, 0), (1, 3)])
for strategy in ("TruncatedSeries", "FullConeIdentity", "BettiSum"):
    K = k_polynomial(S2, strategy)
    print(f"{strategy:>17}: {K.render()}")
print("Frobenius from the leading term:", frobenius_from_hilbert(S2, GRLEX))
