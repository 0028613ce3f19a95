"""
Exhaustive extremal search
==========================

Searches run over up-sets only, which loses nothing for these problems.
The number of up-sets over [n] is the Dedekind number 2, 3, 6, 20, 168, 7581.
"""

from binorm.constructions import kleitman_extremal, threshold_cross_dependent
from binorm.measures import norm
from binorm.search import enumerate_monotone, max_norm_sum_cross_dependent, max_size_no_s_disjoint

print("up-sets per n:", [sum(1 for _ in enumerate_monotone(n)) for n in range(6)])

# largest norm sum of a cross-dependent pair is n + 1 ...
for n in range(2, 5):
    rep = max_norm_sum_cross_dependent(n, 2)
    print(f"n={n}: max norm sum {rep.extremal_value} over {rep.cases_checked} pairs")

# ... attained by threshold families on a one-element window
pair = threshold_cross_dependent(4, 0b1, [1, 1])
print("threshold pair norms:", [str(norm(f)) for f in pair])

# largest family on [5] without 3 pairwise disjoint members
rep = max_size_no_s_disjoint(5, 3)
fam, nu = kleitman_extremal(5, 3)
print("max size:", rep.extremal_value, " construction:", len(fam), " matching number:", nu)
