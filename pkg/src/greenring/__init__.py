"""Exact computation in the Green ring of a generalized Taft algebra.

The algebra H_{n,d} (d dividing n) has an nd-dimensional basis g^a h^b
and a complete list of indecomposable modules M(l, i) with 1 <= l <= d
and i in Z_n.  This package computes tensor product decompositions two
independent ways, works in the presentation of the Green ring by
generalized Fibonacci polynomials, and studies the ring numerically
through its characters.

>>> from greenring import TaftParams, GreenElement, multiply
>>> p = TaftParams(4, 2)
>>> multiply(GreenElement.basis(p, 2, 0), GreenElement.basis(p, 2, 0))
M(2,0) + M(2,2)
"""

__version__ = "0.1.0"

from .cyclotomic import CycNum, cyclotomic_polynomial
from .fibpoly import BivarPoly, fib_poly, fib_poly_closed, fib_roots, fib_roots_eta
from .hmodule import (CycMatrix, HModule, IndexPair, TaftParams, build_module,
                      decompose, direct_sum, dual, standard_module, tensor)
from .ring import (GreenElement, QuotientPoly, basis_to_poly, grothendieck_check,
                   ideal_generator, in_radical_span, is_nilpotent, multiply,
                   poly_to_basis, projective_poly_to_basis, projective_to_poly,
                   radical_basis, radical_generator_check, stable_to_poly, star,
                   to_poly)
from .spectrum import (RModuleClass, SolutionPoint, block_census, class_key,
                       classify_R_module, evaluate, green_relation_residual,
                       irreducibles, projective_algebra_reps,
                       projective_relation_residual, solve_system,
                       stable_semiprimitivity_check, two_dim_indecomposables,
                       vanishes_on_spectrum)

__all__ = [
    "__version__",
    "CycNum", "cyclotomic_polynomial",
    "BivarPoly", "fib_poly", "fib_poly_closed", "fib_roots", "fib_roots_eta",
    "CycMatrix", "HModule", "IndexPair", "TaftParams", "build_module",
    "decompose", "direct_sum", "dual", "standard_module", "tensor",
    "GreenElement", "QuotientPoly", "basis_to_poly", "grothendieck_check",
    "ideal_generator", "in_radical_span", "is_nilpotent", "multiply",
    "poly_to_basis", "projective_poly_to_basis", "projective_to_poly",
    "radical_basis", "radical_generator_check", "stable_to_poly", "star",
    "to_poly",
    "RModuleClass", "SolutionPoint", "block_census", "class_key",
    "classify_R_module", "evaluate", "green_relation_residual", "irreducibles",
    "projective_algebra_reps", "projective_relation_residual", "solve_system",
    "stable_semiprimitivity_check", "two_dim_indecomposables",
    "vanishes_on_spectrum",
]
