"""Explore the Jacobson radical of the Green ring.

The radical is spanned by differences of top-layer classes whose indices
agree mod m; it squares to zero and is generated by a single element as
an ideal.  Because the complexified ring splits into numeric characters,
an element is nilpotent exactly when every character kills it, which
gives a second, independent nilpotency test.
"""

import random

from greenring import (GreenElement, TaftParams, in_radical_span,
                       is_nilpotent, multiply, radical_basis,
                       radical_generator_check, solve_system,
                       vanishes_on_spectrum)

p = TaftParams(8, 4)
print(f"H(8,4): expected radical rank n - m = {p.n - p.m}\n")

basis = radical_basis(p)
for b in basis:
    print(f"  {b}")
print(f"\nrank = {len(basis)}")

print("\nAll pairwise products vanish (J^2 = 0):")
assert all(multiply(x, y).is_zero() for x in basis for y in basis)
print("  confirmed on all", len(basis) ** 2, "products")

print("\nOne element generates the radical as an ideal:",
      radical_generator_check(p))

print("\nExact x*x == 0 versus all characters vanishing, 300 random draws:")
rng = random.Random(4)
pts = solve_system(p)
agree = 0
nilcount = 0
for t in range(300):
    if t % 4 == 0:
        a = GreenElement.zero(p)
        for c, b in zip([rng.randint(-2, 2) for _ in basis], basis):
            a = a + c * b
    else:
        a = GreenElement(p, {(l, i): rng.randint(-2, 2)
                             for l in range(1, 5) for i in range(8)})
    exact = is_nilpotent(a)
    numeric = vanishes_on_spectrum(a, points=pts)
    agree += exact == numeric
    nilcount += exact
print(f"  agreement {agree}/300, nilpotent draws: {nilcount}")
assert agree == 300

print("\nMembership in the radical span is decidable coefficient-wise:")
x = basis[0] + 2 * basis[2]
print(f"  {x}  ->  in span: {in_radical_span(x)}, nilpotent: {is_nilpotent(x)}")
y = x + GreenElement.basis(p, 1, 3)
print(f"  same plus M(1,3)  ->  in span: {in_radical_span(y)}, "
      f"nilpotent: {is_nilpotent(y)}")
