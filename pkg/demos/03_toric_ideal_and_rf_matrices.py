# Minimal binomial generators, RF-matrices and RF-relations.

from mpdsemigroups import AffineSemigroup, is_generic, minimal_generators, pseudo_frobenius
from mpdsemigroups.rf import generated_by_rf, relations_of_matrix, rf_determinant, rf_matrices

S = AffineSemigroup([(2, 11), (3, 0), (5, 9), (7, 4)])
for g in minimal_generators(S):
    print(g.render(), " deg", g.degree)

for f in pseudo_frobenius(S):
    (M,) = rf_matrices(S, f)
    print(f"\nRF{f}  det = {rf_determinant(M, S)}")
    print(M.render())
print("\ngenerated by RF-relations:", generated_by_rf(S).value)

R = AffineSemigroup([(1, 3), (1, 5), (2, 1), (2, 3), (5, 1)])
mats = rf_matrices(R, (5, 13))
print(f"\n(5,13) has {len(mats)} RF-matrices")
M = mats[-1]
print(M.render())
for (i, j), rel in relations_of_matrix(R, M).items():
    print(f"  phi_{i + 1}{j + 1} = {rel.binomial.render():<22} deg {rel.degree}  bound {rel.bound}")

G = AffineSemigroup([(20, 0), (24, 1), (1, 25), (0, 31)])
print("\ngeneric:", is_generic(G).value, "with", len(pseudo_frobenius(G)), "PF elements")
