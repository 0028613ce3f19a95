"""
Exhaustive verification sweeps
==============================

Each sweep returns a report with the tightest case found, the first
counterexample (if any) and a few equality witnesses.
"""

from binorm.verifier import (
    classify_pair,
    sweep_boundary,
    sweep_lym,
    sweep_multilayer,
    sweep_size_norm,
    sweep_union_bounds,
)

rep = sweep_lym(4)
print(rep.status, "- antichains checked:", rep.details["antichains_by_filter"])

rep = sweep_boundary(4)
print(rep.status, "- boundary norm never below", rep.extremal_value)
print("  equality cases are level complexes:", rep.details["equality_witnesses_are_level_complexes"])

rep = sweep_multilayer(4, 3)
print(rep.status, f"- {rep.cases_checked} (tuple, composition) cases, tightest {rep.details['tightest']}")

for w in range(4):
    rep = sweep_union_bounds(4, w)
    print(f"w={w}:", rep.status, "norm", rep.extremal_value, "<=", rep.bound)

# the size-versus-norm bound needs n >= 3l; below that a counterexample appears
print("(5,1):", sweep_size_norm(5, 1).status, " class", classify_pair(5, 1).value)
rep = sweep_size_norm(4, 3)
print("(4,3):", rep.status, rep.counterexample[0].as_sets() if rep.counterexample else "")

# serialise a report; timing can be dropped for byte-identical output
print(rep.to_json(timing=False)[:120], "...")
