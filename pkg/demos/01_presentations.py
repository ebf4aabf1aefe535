"""Walk through the three ring presentations for a few (n, d) pairs.

The Green ring of H_{n,d} is Z[y,z] modulo y^n - 1 and a relation built
from a generalized Fibonacci polynomial; the projective class ring and
the stable ring are quotients with their own z-relations.  This script
prints all three, shows where the basis classes land, and round-trips
an element through the polynomial picture and back.
"""

from greenring import (GreenElement, TaftParams, basis_to_poly,
                       ideal_generator, poly_to_basis, to_poly)
from greenring.fibpoly import poly_str

for n, d in ((4, 2), (6, 3), (8, 4), (5, 5)):
    p = TaftParams(n, d)
    print(f"\n=== H({n},{d}), m = {p.m} ===")
    for kind in ("green", "projective", "stable"):
        rel = poly_str(ideal_generator(p, kind).terms)
        print(f"  {kind:10s}: Z[y,z] / (y^{n} - 1, {rel})")

print("\nBasis classes land on y^((n-i) mod n) * F_l(y^m, z):")
p = TaftParams(6, 3)
for l, i in ((1, 0), (1, 1), (2, 0), (3, 0), (3, 2)):
    img = basis_to_poly(p, l, i)
    print(f"  [M({l},{i})] -> {poly_str(img.terms)}")

print("\nRound trip of a random-looking combination at (6,3):")
a = GreenElement(p, {(1, 2): 3, (2, 0): -1, (3, 5): 2})
img = to_poly(a)
back = poly_to_basis(img)
print(f"  start : {a}")
print(f"  poly  : {poly_str(img.terms)}")
print(f"  back  : {back}")
assert back == a
