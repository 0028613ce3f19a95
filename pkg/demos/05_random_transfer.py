"""
Averaging over random orderings
===============================

A random permutation splits [n] into blocks of sizes k_1, ..., k_s and a
tail of size r.  Each family induces a family on the tail, and its
expected layer densities equal the original densities at k_i + j.
"""

import numpy as np

from binorm.core import layer_profile
from binorm.transfer import exact_gamma, sample_gamma
from binorm.verifier import random_cross_dependent

rng = np.random.Generator(np.random.PCG64(5))
fams = random_cross_dependent(6, 2, rng)
ks, r = (1, 2), 3

exact = exact_gamma(fams, ks, r)
print("exact     :", [[str(x) for x in row] for row in exact])
print("densities :", [[str(x) for x in layer_profile(f)[k:k + r + 1]] for f, k in zip(fams, ks)])

# Monte Carlo gives the same numbers up to sampling error, and the
# result depends only on the seed, not on the thread count
est = sample_gamma(fams, ks, r, samples=50_000, seed=3, threads=2)
print("estimate  :", np.round(est.mean, 3).tolist())
print("std error :", np.round(est.stderr, 4).tolist())
