"""The sharpened central-triangle bound.

Assuming the central triangle holds only exterior ovals and its net
contribution reaches magnitude 3, all nests must separate and the base
signs all oppose it.  The a-priori scheme rows then close: three because
their central residual forbids the forced exterior ovals, the rest
because a corner contribution of 1 demands an up-tagged even nest whose
separating-formula residual is -1.
"""

from nestprohibitor import prove_proposition2

report = prove_proposition2()
print(f"rows: {len(report.rows)}, all closed: {report.all_closed}")
print()
for row in report.rows:
    schemes = ", ".join(str(s) for s in row.schemes)
    print(f"row ({schemes}):  E0 = {row.e0}" + (f"   [{row.note}]" if row.note else ""))
    for closure in row.closures:
        print(f"    closed by {closure.rule_id}: {closure.evidence}")
    print()
