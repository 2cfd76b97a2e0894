"""
Smith normal form and quotient groups
=====================================
"""

from gochow.zlattice import (IntMatrix, QuotientPresentation, cokernel_structure,
                             element_order_in_quotient, smith_normal_form)

M = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
D, U, V = smith_normal_form(M)
print(D.diagonal())
assert U @ M @ V == D

# Z^4 modulo two relation vectors
q = QuotientPresentation.from_vectors(4, [[-1, 1, 0, 0], [0, -2, 2, 0]])
print(cokernel_structure(q))
print(element_order_in_quotient(q, [0, 1, -1, 0]))
print(element_order_in_quotient(q, [1, 0, 0, 0]))
