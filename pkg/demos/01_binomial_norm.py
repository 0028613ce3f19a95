"""
Binomial norm of a family
=========================

Each member of a family over [n] weighs 1 / C(n, |F|), so a full layer
weighs exactly one and the whole power set weighs n + 1.
"""

from binorm import Family, make_family, norm, power_set, rho
from binorm.core import layer_profile
from binorm.measures import extend

# a family is built from lists of elements; arithmetic stays exact
star = make_family(4, [[1], [1, 2], [1, 3], [1, 4]])
print("members:", star.as_sets())
print("norm   :", norm(star))          # 1/4 + 3 * 1/6
print("layers :", [str(x) for x in layer_profile(star)])

# relative measure rho = norm / (n + 1) lies in [0, 1]
print("rho(2^[4]) =", rho(power_set(4)))
print("rho(star)  =", rho(star))

# adding a new element n+1 and both copies of each member keeps rho fixed
print("rho after extension =", rho(extend(star)))

# members can also be given as bitmasks: element i is bit i-1
print(Family(3, [0b011, 0b101]).as_sets())
