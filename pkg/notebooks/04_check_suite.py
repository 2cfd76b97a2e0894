"""
Running the check suite
=======================
"""

from gochow.cli import emit_report
from gochow.verifier import CHECKS, find_torsion_lift, run_suite

for cid, check in CHECKS.items():
    print(cid, check.title)

reports = run_suite(2, 8)
print(emit_report(reports, "table"))

# an explicit 2-torsion lift of c3 for n = 2
lift = find_torsion_lift(2, 3)
print(lift.element)
print(lift.certificate())
