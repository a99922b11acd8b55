"""
Checking the identity registry
==============================

Every identity in the registry is evaluated exactly at each grid point.
When the stated form fails, the first counterexample is kept and the
corrected form is tried over the same grid.
"""

import json

from jspinor import Grid, Status, run_suite

report = run_suite(Grid(n_max=32, r_max=4, t_max=4, order=16))

for entry in report.results:
    print(f"{entry.id:<18} {entry.verdict.status.value}")

###############################################################################
# Details for the ones that needed a fix

for entry in report.results:
    v = entry.verdict
    if v.status is Status.HOLDS_CORRECTED:
        print()
        print(entry.id, v.counterexample["params"])
        print("  stated:   ", entry.printed_statement)
        print("  corrected:", v.corrected_statement)

# The JSON form is stable apart from the timing field
print(json.dumps(report.to_json(include_runtime=False))[:200], "...")
