"""Decompose tensor products of indecomposables two independent ways.

Route one builds the actual module matrices over the cyclotomic field
and peels Jordan-style chains out of the tensor product.  Route two
multiplies in the polynomial presentation of the Green ring.  They must
agree cell for cell; this is the core cross-check of the package.
"""

from greenring import (GreenElement, TaftParams, decompose, multiply,
                       standard_module, tensor)

p = TaftParams(6, 3)
print(f"Green ring of H(6,3), m = {p.m}\n")

pairs = [((2, 0), (2, 0)), ((2, 0), (3, 0)), ((3, 0), (3, 0)),
         ((1, 4), (3, 1)), ((2, 5), (2, 1))]

for (la, ia), (lb, ib) in pairs:
    viapoly = multiply(GreenElement.basis(p, la, ia),
                       GreenElement.basis(p, lb, ib))
    parts = decompose(tensor(standard_module(p, la, ia),
                             standard_module(p, lb, ib)))
    oracle = GreenElement(p, dict(parts))
    mark = "ok" if viapoly == oracle else "MISMATCH"
    print(f"  M({la},{ia}) * M({lb},{ib}) = {viapoly}   [{mark}]")
    assert viapoly == oracle

print("\nThe top layer multiplies like a twisted group algebra:")
for i, j in ((0, 0), (1, 4)):
    prod = multiply(GreenElement.basis(p, 3, i), GreenElement.basis(p, 3, j))
    print(f"  M(3,{i}) * M(3,{j}) = {prod}")

print("\nDimension check across a full row of the table:")
for l in range(1, 4):
    for i in range(6):
        parts = decompose(tensor(standard_module(p, 2, 1),
                                 standard_module(p, l, i)))
        total = sum(idx.l * mult for idx, mult in parts.items())
        assert total == 2 * l
print("  every product of dim-2 x dim-l modules has total dimension 2l")
