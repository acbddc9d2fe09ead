"""Run the full exclusion and drill into one scheme's proof traces.

Every candidate complex type of every all-even three-nest scheme is
eliminated: jump-bearing candidates by the trichotomy's pair-sign parity,
the rest by the zone bounds after the orientation identities pin the
triangle contributions.
"""

import json

from nestprohibitor import RealScheme, eliminate, no_jump_candidates, prove_theorem1

report = prove_theorem1()
print(
    f"schemes examined: {len(report.results)}, excluded: {report.excluded_count} "
    f"({report.known_count} previously known, {report.new_count} new)"
)
print()

scheme = RealScheme((2, 2, 20), 1)
print(f"drill-down for {scheme}:")
for candidate in no_jump_candidates(scheme)[:6]:
    trace = eliminate(candidate, scheme)
    print(f"  {trace.candidate}: {trace.outcome} via {trace.headline_rule}")
print("  ...")
print()

# one full trace, as it would be exported
candidate = no_jump_candidates(scheme)[0]
trace = eliminate(candidate, scheme)
print("first trace as JSON:")
print(json.dumps(trace.to_json_dict(), indent=2)[:1200])
print("  ...")
