"""Survivors outside the even family, and jump-case witnesses.

The engine certifies eliminations only.  On a scheme with an odd nest the
jump trichotomy's arithmetic is satisfiable, and the search produces a
concrete witness ledger for the surviving candidate.
"""

import json

from nestprohibitor import (
    CandidateSpace,
    RealScheme,
    candidate_complex_types,
    eliminate,
    jump_candidates,
    ledger_satisfiable,
)

scheme = RealScheme((1, 2, 22), 0)
print(f"scheme {scheme}:")
survivors = []
for candidate in candidate_complex_types(scheme):
    trace = eliminate(candidate, scheme)
    if trace.outcome == "survives":
        survivors.append(trace)
print(f"  candidates: {len(candidate_complex_types(scheme))}, survivors: {len(survivors)}")
for trace in survivors:
    print(f"  survives: {trace.candidate}")
print()

trace = survivors[0]
print("witness ledger for the first survivor:")
print(json.dumps(trace.witness.to_json_dict(), indent=2))
print()

print("direct satisfiability query, crossing case of the trichotomy:")
case2_scheme = RealScheme((1, 2, 2), 20)
for candidate in jump_candidates(case2_scheme):
    ledger = ledger_satisfiable(CandidateSpace(candidate, case2_scheme), required_case=2)
    if ledger is not None:
        print(f"  {candidate}")
        print(f"  pair delta {ledger.pi_delta}, lambda = {list(ledger.lam)}")
        break
