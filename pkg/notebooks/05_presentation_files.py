"""
User presentations and the Kunneth extension
============================================

Rings can be read from a small text format.  Adjoining a free degree-1
generator tensors every piece with Z[l].
"""

from gochow import catalog, graded_piece

text = """
# Z[c2, c3] / (2 c3)
generator c2 2
generator c3 3
relation 2*c3
"""

P = catalog.parse_presentation(text, name="so3")
K = catalog.kunneth_extend(P)
for m in range(7):
    print(m, graded_piece(P, m).structure, "|", graded_piece(K, m).structure)

print(catalog.format_presentation(catalog.go_presentation(1)))

try:
    catalog.parse_presentation("generator c1 1\ngenerator c2 2\nrelation c1 + c2\n")
except catalog.PresentationFormatError as exc:
    print("rejected:", exc)
