"""Exact graded-ring engine for the Chow ring presentation of GO(2n).

Submodules:

- ``polycore``   sparse polynomials over Z with graded variables
- ``zlattice``   Hermite/Smith normal forms, abelian group structure
- ``gradedring`` presented graded rings, per-degree pieces and maps
- ``catalog``    the GO(2n), O(2n), torus and B rings, presentation files
- ``verifier``   the C1..C12 check suite and torsion lifts
- ``cli``        command-line front end (``gochow``)
"""

from .catalog import (b_basis, go_presentation, go_relations, kunneth_extend, load_presentation,
                      o_presentation, torus_map)
from .gradedring import (RingMapSpec, RingPresentation, graded_piece, induced_map_in_degree,
                         multiplication_map, quotient_piece, torsion_summary)
from .polycore import GradedContext, Polynomial, enumerate_monomials, substitute
from .verifier import find_torsion_lift, run_check, run_suite
from .zlattice import FGAbelianGroup, IntMatrix, QuotientPresentation, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "GradedContext", "Polynomial", "enumerate_monomials", "substitute",
    "FGAbelianGroup", "IntMatrix", "QuotientPresentation", "smith_normal_form",
    "RingPresentation", "RingMapSpec", "graded_piece", "induced_map_in_degree",
    "multiplication_map", "quotient_piece", "torsion_summary",
    "go_presentation", "go_relations", "o_presentation", "torus_map", "b_basis",
    "kunneth_extend", "load_presentation",
    "run_check", "run_suite", "find_torsion_lift",
]
