"""
Maps between graded pieces
==========================

Restriction to the torus, reduction modulo l, and multiplication by l.
"""

from gochow import catalog
from gochow.gradedring import induced_map_in_degree, multiplication_map

n = 2
R = catalog.go_presentation(n)
torus = catalog.torus_map(n)
print(torus.images["c2"])

for m in range(5):
    ind = induced_map_in_degree(torus, m)
    print(m, "kernel of restriction:", ind.kernel, " torsion:", ind.source.torsion)

lam = R.var("l")
for m in range(5):
    mult = multiplication_map(R, lam, m)
    print(m, "ker l:", mult.kernel, [str(g) for g in mult.kernel_generators()])

to_o = induced_map_in_degree(catalog.o_map(n), 3)
print("onto the O(2n) ring in degree 3:", to_o.is_surjective, to_o.image)
