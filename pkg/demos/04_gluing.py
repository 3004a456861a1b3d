# Gluing S = S1 +_d S2 and how PF and RF-relations pass through it.

from mpdsemigroups import AffineSemigroup, find_gluings, pf_of_gluing, rf_generation_transfer, rf_of_gluing
from mpdsemigroups.gaps import pseudo_frobenius

S = AffineSemigroup([(0, 9), (18, 0), (27, 0), (9, 18), (8, 8), (10, 10)])
(dec,) = find_gluings(S)
print("partition", dec.partition, "d =", dec.glue_element)
print("PF(S1) =", pseudo_frobenius(dec.s1).elements, " PF(S2) =", pseudo_frobenius(dec.s2).elements)
print("PF(S)  =", pf_of_gluing(dec).elements)

M = rf_of_gluing(dec, (9, 9), (22, 22), {"f_plus_d": (3, 0, 1, 0), "g_plus_d": (0, 4)})
print(M.render())

res = rf_generation_transfer(dec)
for w in res.witnesses:
    print("rows", w.row_f, w.row_g, "->", w.relation.render())
print("glued ideal generated by RF-relations:", res.glued_generated)
