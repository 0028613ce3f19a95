"""
Properties and set-family operators
===================================

Antichains, intersecting families, up-sets and down-sets, together with
the operators used to move between them.
"""

from binorm import make_family
from binorm.operators import boundary, box_product, down_closure, minimal_members, up_closure
from binorm.properties import (
    are_cross_dependent,
    is_antichain,
    is_intersecting,
    max_disjoint_members,
)

fam = make_family(4, [[1, 2], [2, 3], [1, 3]])
print("antichain:", is_antichain(fam), " intersecting:", is_intersecting(fam))

# closures; minimal members of the up-closure give the family back
up = up_closure(fam)
print("up-closure size:", len(up), " minimal members:", minimal_members(up).as_sets())
print("down-closure size:", len(down_closure(fam)))

# outer boundary: sets outside the family at distance one from a member
print("boundary:", boundary(make_family(3, [[]])).as_sets())

# two families are cross-dependent when no pair of picks is disjoint
a = make_family(4, [[1], [2]])
b = make_family(4, [[1, 3], [2, 4]])
print("cross-dependent:", are_cross_dependent([a, b]))
print("box product:", box_product([a, b]).as_sets())

# matching number: largest number of pairwise disjoint members
print("matching number:", max_disjoint_members(make_family(4, [[1], [2], [1, 2], [3, 4]])))
