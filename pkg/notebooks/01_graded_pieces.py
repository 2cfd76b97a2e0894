"""
Graded pieces of a presented ring
=================================

Each degree of a graded ring over the integers is a finitely generated
abelian group.  We compute them one degree at a time.
"""

from gochow import catalog, graded_piece, torsion_summary

# the ring for n = 1: generators l, c1, c2 and two relations
R = catalog.go_presentation(1)
for rel in R.relations:
    print("relation:", rel)

for m in range(6):
    piece = graded_piece(R, m)
    print(m, len(piece.basis), "monomials ->", piece.structure)

# torsion only
for entry in torsion_summary(R, 5, min_degree=1):
    print(entry.degree, entry.invariant_factors, entry.cardinality)

# classes of polynomials, in structure coordinates
ctx = R.context
l, c1 = ctx.var("l"), ctx.var("c1")
p1 = graded_piece(R, 1)
print("c1 - l has order", p1.order(c1 - l))
print("l has order", p1.order(l))
