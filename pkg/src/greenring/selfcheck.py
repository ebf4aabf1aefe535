"""Cross-validation battery for one parameter pair (n, d).

Every check pits at least two independent computations against each
other: ring products through the polynomial presentation against tensor
decompositions of the matrix models, exact nilpotency against numeric
character vanishing, closed formulas against recurrences, and soon.
The battery backs the command line ``selfcheck`` and the acceptance
tests.
"""

from __future__ import annotations

import cmath
import random
from collections import Counter
from fractions import Fraction

import numpy as np

from . import spectrum as sp
from .fibpoly import BivarPoly, fib_poly, fib_poly_closed, fib_roots, fib_roots_eta
from .hmodule import TaftParams, decompose, dual, standard_module, tensor
from .ring import (GreenElement, QuotientPoly, basis_to_poly,
                   grothendieck_check, ideal_generator, in_radical_span,
                   is_nilpotent, multiply, poly_to_basis, radical_basis,
                   radical_generator_check, star, stable_to_poly, to_poly)

DEFAULT_GRID = ((4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3), (12, 4), (5, 5), (6, 6))


def all_classes(params):
    return [(l, i) for l in range(1, params.d + 1) for i in range(params.n)]


def table_cells(params):
    """Full basis multiplication table with both routes compared."""
    for la, ia in all_classes(params):
        a = GreenElement.basis(params, la, ia)
        ma = standard_module(params, la, ia)
        for lb, ib in all_classes(params):
            viapoly = multiply(a, GreenElement.basis(params, lb, ib))
            parts = decompose(tensor(ma, standard_module(params, lb, ib)))
            oracle = GreenElement(params, dict(parts))
            yield {
                "l1": la, "i1": ia, "l2": lb, "i2": ib,
                "product": repr(viapoly),
                "agree": viapoly == oracle,
            }


def check_table_agreement(params):
    cells = list(table_cells(params))
    bad = [c for c in cells if not c["agree"]]
    return {"name": "tensor_ring_agreement", "pass": not bad,
            "pairs": len(cells), "mismatches": len(bad)}


def check_presentation(params):
    """Free rank nd with the monomial basis, and exact basis round trips."""
    n, d = params.n, params.d
    ok = True
    seen = set()
    for i in range(n):
        for j in range(d):
            mono = QuotientPoly.monomial(params, "green", i, j)
            ok = ok and mono.terms == {(i, j): 1}
            seen.add(frozenset(mono.terms.items()))
    ok = ok and len(seen) == n * d
    for l, i in all_classes(params):
        b = GreenElement.basis(params, l, i)
        ok = ok and poly_to_basis(basis_to_poly(params, l, i)) == b
    rng = random.Random(1009 * n + d)
    for _ in range(25):
        a = GreenElement(params, {c: rng.randint(-4, 4) for c in all_classes(params)})
        ok = ok and poly_to_basis(to_poly(a)) == a
    ok = ok and grothendieck_check(params)
    return {"name": "presentation_rank_roundtrip", "pass": ok, "rank": n * d}


def check_fibonacci():
    """Recurrence vs closed form, and the explicit root families."""
    ok = all(fib_poly(s) == fib_poly_closed(s) for s in range(1, 31))
    worst = 0.0
    for s in range(2, 13):
        for t in range(24):
            a = cmath.exp(2j * cmath.pi * t / 24)
            poly = fib_poly(s)
            for x in fib_roots(a, s):
                worst = max(worst, abs(poly.evaluate(a, x)))
            for eta, x in fib_roots_eta(a, s):
                worst = max(worst, abs(poly.evaluate(a, x)))
                if abs(eta ** (2 * s) - 1) > 1e-10 or abs(eta**2 - 1) < 1e-10:
                    ok = False
    return {"name": "fibonacci_roots", "pass": ok and worst <= 1e-8,
            "max_residual": worst}


def check_solution_count(params):
    n, d, m = params.n, params.d, params.m
    pts = sp.solve_system(params)
    expected = n * d - n + m
    residual = 0.0
    gen = ideal_generator(params, "green")
    for pt in pts:
        val = gen.evaluate(pt.lam, pt.mu)
        residual = max(residual, abs(val), abs(pt.lam**n - 1))
    return {"name": "solution_count", "pass": len(pts) == expected and residual <= 1e-8,
            "count": len(pts), "expected": expected, "max_residual": residual}


def _exact_rank(vectors, keys):
    """Rank over Q of integer vectors given as dicts on a common key set."""
    order = {key: t for t, key in enumerate(keys)}
    rows = []
    for vec in vectors:
        row = [Fraction(0)] * len(order)
        for key, c in vec.items():
            row[order[key]] = Fraction(c)
        rows.append(row)
    rank = 0
    for col in range(len(order)):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / lead
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def check_radical(params, samples=1000, seed=None):
    """Radical rank, J^2 = 0, the principal generator, and the numeric
    nilpotency cross-check on random elements."""
    n, d, m = params.n, params.d, params.m
    basis = radical_basis(params)
    ok = len(basis) == n - m
    ok = ok and _exact_rank([b.coeffs for b in basis],
                            [(d, i) for i in range(n)]) == n - m
    for x in basis:
        for y in basis:
            ok = ok and multiply(x, y).is_zero()
    ok = ok and radical_generator_check(params)
    rng = random.Random(seed if seed is not None else 2027 * n + d)
    pts = sp.solve_system(params)
    disagreements = 0
    classes = all_classes(params)
    for t in range(samples):
        if t % 5 == 0:
            coeffs = [rng.randint(-3, 3) for _ in basis]
            a = GreenElement.zero(params)
            for c, b in zip(coeffs, basis):
                a = a + c * b
        else:
            a = GreenElement(params, {c: rng.randint(-3, 3) for c in classes})
        exact = is_nilpotent(a)
        numer = sp.vanishes_on_spectrum(a, points=pts)
        if exact != numer:
            disagreements += 1
    return {"name": "radical_structure", "pass": ok and disagreements == 0,
            "rank": len(basis), "samples": samples, "disagreements": disagreements}


def check_census(params):
    """Class counts, block census and the relations on every matrix class."""
    census = sp.block_census(params)
    residual = 0.0
    for cls in sp.irreducibles(params) + sp.two_dim_indecomposables(params):
        residual = max(residual, sp.green_relation_residual(params, cls.Y, cls.Z))
    one_d, two_d = sp.projective_algebra_reps(params)
    for cls in one_d + two_d:
        residual = max(residual, sp.projective_relation_residual(params, cls.Y, cls.Z))
    n, m = params.n, params.m
    ok = len(one_d) == n + m and len(two_d) == n - m
    return {"name": "class_census", "pass": ok and residual <= 1e-8,
            "census": census, "max_residual": residual}


def _random_direct_sum(params, rng, max_dim):
    pool = sp.irreducibles(params) + sp.two_dim_indecomposables(params)
    chosen = []
    total = 0
    while True:
        cls = pool[rng.randrange(len(pool))]
        if total + cls.dim > max_dim:
            break
        chosen.append(cls)
        total += cls.dim
        if total >= max_dim or rng.random() < 0.2:
            break
    dim = sum(c.dim for c in chosen)
    Y = np.zeros((dim, dim), dtype=complex)
    Z = np.zeros((dim, dim), dtype=complex)
    off = 0
    for c in chosen:
        Y[off:off + c.dim, off:off + c.dim] = c.Y
        Z[off:off + c.dim, off:off + c.dim] = c.Z
        off += c.dim
    return chosen, Y, Z


def check_classifier(params, rounds=12, max_dim=12, seed=None):
    rng = random.Random(seed if seed is not None else 4099 * params.n + params.d)
    ok = True
    for t in range(rounds):
        chosen, Y, Z = _random_direct_sum(params, rng, max_dim)
        if t % 3 == 2:
            npr = np.random.default_rng(rng.randrange(2**32))
            T = np.eye(Y.shape[0]) + 0.2 * npr.standard_normal(Y.shape)
            Y = np.linalg.solve(T, Y @ T)
            Z = np.linalg.solve(T, Z @ T)
        got = sp.classify_R_module(params, Y, Z)
        want = Counter(sp.class_key(c) for c in chosen)
        ok = ok and got == want
    return {"name": "classifier_roundtrip", "pass": ok, "rounds": rounds}


def check_duality(params):
    """star is an involution and matches the module level dual."""
    ok = True
    for l, i in all_classes(params):
        b = GreenElement.basis(params, l, i)
        sb = star(b)
        ok = ok and star(sb) == b
        viadual = GreenElement(params, dict(decompose(dual(standard_module(params, l, i)))))
        ok = ok and sb == viadual
    rng = random.Random(31 * params.n + params.d)
    for _ in range(10):
        a = GreenElement(params, {c: rng.randint(0, 2) for c in all_classes(params)})
        b = GreenElement(params, {c: rng.randint(0, 2) for c in all_classes(params)})
        ok = ok and star(multiply(a, b)) == multiply(star(a), star(b))
    return {"name": "duality_involution", "pass": ok}


def check_projective_stable(params, samples=1000, seed=None):
    """Nilpotents of the projective class ring, and stable semiprimitivity."""
    n, d, m = params.n, params.d, params.m
    rng = random.Random(seed if seed is not None else 8191 * n + d)
    ok = all(in_radical_span(b) for b in radical_basis(params))
    pbasis = [(1, i) for i in range(n)] + [(d, i) for i in range(n)]
    for t in range(samples):
        if t % 2 == 0:
            a = GreenElement(params, {c: rng.randint(-2, 2) for c in pbasis})
        else:
            coeffs = [rng.randint(-2, 2) for _ in range(n - m)]
            a = GreenElement.zero(params)
            for c, b in zip(coeffs, radical_basis(params)):
                a = a + c * b
        if is_nilpotent(a) != in_radical_span(a):
            ok = False
    stable_ok = sp.stable_semiprimitivity_check(params)
    stable_classes = [(l, i) for l in range(1, d) for i in range(n)]
    nil_found = 0
    if stable_classes:
        for _ in range(samples):
            a = GreenElement(params, {c: rng.randint(-3, 3) for c in stable_classes})
            img = stable_to_poly(a)
            if not img.is_zero() and (img * img).is_zero():
                nil_found += 1
    return {"name": "projective_stable", "pass": ok and stable_ok and nil_found == 0,
            "stable_full_rank": stable_ok, "stable_nilpotents": nil_found}


def check_taft_specialization(params):
    """For m = 1 the green ideal collapses to (z - y - 1) * F_d(y, z)."""
    if params.m != 1:
        return {"name": "taft_specialization", "pass": True, "applicable": False}
    want = BivarPoly({(0, 1): 1, (1, 0): -1, (0, 0): -1}) * fib_poly_closed(params.d)
    got = ideal_generator(params, "green")
    return {"name": "taft_specialization", "pass": got.terms == want.terms,
            "applicable": True}


def checks_for(params, samples=1000):
    yield check_table_agreement(params)
    yield check_presentation(params)
    yield check_solution_count(params)
    yield check_radical(params, samples=samples)
    yield check_census(params)
    yield check_classifier(params)
    yield check_duality(params)
    yield check_projective_stable(params, samples=samples)
    yield check_taft_specialization(params)


def run_selfcheck(pairs=None, samples=1000):
    """Run the battery on each (n, d) pair; returns (records, all_ok)."""
    records = [{"name": "fibonacci", "n": None, "d": None,
                "checks": [check_fibonacci()]}]
    for n, d in (pairs if pairs is not None else DEFAULT_GRID):
        params = TaftParams(n, d)
        records.append({"name": f"pair_{n}_{d}", "n": n, "d": d,
                        "checks": list(checks_for(params, samples=samples))})
    ok = all(c["pass"] for rec in records for c in rec["checks"])
    return records, ok
