"""Points of the character variety and finite-dimensional classification.

The complexified Green ring R = C (x) r(H_{n,d}) has nd - n + m algebra
maps to C, indexed by pairs (lambda, mu) solving the defining relations.
Its finite-dimensional indecomposable modules are the 1-dim characters
plus n - m two-dimensional modules with a Jordan block; classify any
(Y, Z) pair realizing the relations and recover the summands.
"""

import random
from collections import Counter

import numpy as np

from greenring import (TaftParams, block_census, class_key, classify_R_module,
                       irreducibles, solve_system, two_dim_indecomposables)
from greenring.selfcheck import _random_direct_sum

p = TaftParams(6, 3)
print(f"H(6,3): |T| should be nd - n + m = {6 * 3 - 6 + 2}\n")

pts = solve_system(p)
for pt in pts:
    lam = f"{pt.lam:.3f}".replace("j", "i")
    mu = f"{complex(pt.mu):.3f}".replace("j", "i")
    tag = "mu=2 line" if pt.j is None else f"j={pt.j}"
    print(f"  k={pt.k}  lambda={lam:>16s}  mu={mu:>16s}  ({tag})")
print(f"\ntotal: {len(pts)}")

print("\nCensus of indecomposable R-modules and their Jordan blocks:")
for key, val in sorted(block_census(p).items()):
    print(f"  {key:20s} {val}")
print(f"  (irreducibles: {len(irreducibles(p))}, "
      f"two-dim: {len(two_dim_indecomposables(p))})")

print("\nClassify a hidden direct sum after a random change of basis:")
rng = random.Random(12)
npr = np.random.default_rng(12)
chosen, Y, Z = _random_direct_sum(p, rng, 9)
T = np.eye(Y.shape[0]) + 0.2 * npr.standard_normal(Y.shape)
Yc = np.linalg.solve(T, Y @ T)
Zc = np.linalg.solve(T, Z @ T)
got = classify_R_module(p, Yc, Zc)
print(f"  hidden : {sorted(class_key(c) for c in chosen)}")
print(f"  found  : {sorted(got.elements())}")
assert got == Counter(class_key(c) for c in chosen)
