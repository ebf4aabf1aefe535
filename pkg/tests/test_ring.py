import random

import pytest

from greenring.fibpoly import poly_str
from greenring.hmodule import TaftParams
from greenring.ring import (GreenElement, QuotientPoly, basis_to_poly,
                            grothendieck_check, ideal_generator,
                            in_radical_span, is_nilpotent, multiply,
                            poly_to_basis, projective_poly_to_basis,
                            projective_to_poly, radical_basis,
                            radical_generator_check, stable_to_poly, star,
                            to_poly)

GRID = ((4, 2), (6, 2), (6, 3), (8, 4), (5, 5))


def random_element(params, rng, lo=-4, hi=4, layers=None):
    layers = layers if layers is not None else range(1, params.d + 1)
    coeffs = {(l, i): rng.randint(lo, hi)
              for l in layers for i in range(params.n)}
    return GreenElement(params, coeffs)


def test_ideal_generators_pinned():
    cases = {
        (4, 2, "green"): "z^2 - z - y^2*z",
        (4, 2, "projective"): "z^2 - z - y^2*z",
        (4, 2, "stable"): "z",
        (6, 3, "green"): "z^3 - z^2 - y^2*z^2 - y^2*z + y^2 + y^4",
        (6, 3, "projective"): "z^2 - z - y^2*z - y^4*z",
        (6, 3, "stable"): "z^2 - y^2",
        (8, 4, "green"): "z^4 - z^3 - y^2*z^3 - 2*y^2*z^2 + 2*y^2*z + 2*y^4*z",
        (5, 5, "stable"): "z^4 - 3*y*z^2 + y^2",
    }
    for (n, d, kind), want in cases.items():
        got = poly_str(ideal_generator(TaftParams(n, d), kind).terms)
        assert got == want, (n, d, kind)


def test_basis_images_pinned():
    p = TaftParams(4, 2)
    assert basis_to_poly(p, 1, 0).terms == {(0, 0): 1}
    assert basis_to_poly(p, 1, 1).terms == {(3, 0): 1}
    assert basis_to_poly(p, 2, 0).terms == {(0, 1): 1}
    assert basis_to_poly(p, 2, 1).terms == {(3, 1): 1}
    p = TaftParams(6, 3)
    # [M(3,0)] = F_3(y^2, z) = z^2 - y^2
    assert basis_to_poly(p, 3, 0).terms == {(0, 2): 1, (2, 0): -1}


def test_monomials_distinct_and_roundtrip():
    for n, d in GRID:
        p = TaftParams(n, d)
        seen = set()
        for i in range(n):
            for j in range(d):
                mono = QuotientPoly.monomial(p, "green", i, j)
                assert mono.terms == {(i, j): 1}
                seen.add(tuple(sorted(mono.terms.items())))
        assert len(seen) == n * d
        for l in range(1, d + 1):
            for i in range(n):
                b = GreenElement.basis(p, l, i)
                assert poly_to_basis(to_poly(b)) == b


def test_roundtrip_random_combinations():
    rng = random.Random(101)
    for n, d in GRID:
        p = TaftParams(n, d)
        for _ in range(20):
            a = random_element(p, rng)
            assert poly_to_basis(to_poly(a)) == a


def test_multiply_pinned_examples():
    p = TaftParams(4, 2)
    prod = multiply(GreenElement.basis(p, 2, 0), GreenElement.basis(p, 2, 0))
    assert prod == GreenElement(p, {(2, 0): 1, (2, 2): 1})

    p = TaftParams(6, 3)
    assert multiply(GreenElement.basis(p, 1, 1), GreenElement.basis(p, 3, 2)) \
        == GreenElement.basis(p, 3, 3)
    prod = multiply(GreenElement.basis(p, 2, 0), GreenElement.basis(p, 2, 0))
    assert prod == GreenElement(p, {(3, 0): 1, (1, 4): 1})


def test_unit_element():
    for n, d in GRID:
        p = TaftParams(n, d)
        one = GreenElement.unit(p)
        assert one == GreenElement.basis(p, 1, 0)
        rng = random.Random(n * 100 + d)
        for _ in range(5):
            a = random_element(p, rng)
            assert multiply(one, a) == a
            assert multiply(a, one) == a


def test_ring_axioms_sampled():
    rng = random.Random(333)
    for n, d in ((6, 3), (8, 4)):
        p = TaftParams(n, d)
        for _ in range(10):
            a, b, c = (random_element(p, rng, -2, 2) for _ in range(3))
            assert multiply(a, b) == multiply(b, a)
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
            assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)


def test_oracle_path_agrees_on_random_nonnegative():
    rng = random.Random(77)
    for n, d in ((4, 2), (6, 3)):
        p = TaftParams(n, d)
        for _ in range(6):
            a = random_element(p, rng, 0, 2)
            b = random_element(p, rng, 0, 2)
            assert multiply(a, b, path="oracle") == multiply(a, b, path="poly")


def test_oracle_path_rejects_negative_coefficients():
    p = TaftParams(4, 2)
    a = GreenElement(p, {(2, 0): 1, (1, 1): -1})
    with pytest.raises(ValueError):
        multiply(a, GreenElement.unit(p), path="oracle")


def test_star_pinned_and_involutive():
    p = TaftParams(4, 2)
    assert star(GreenElement.basis(p, 2, 0)) == GreenElement.basis(p, 2, 2)
    for n, d in GRID:
        p = TaftParams(n, d)
        rng = random.Random(n * 31 + d)
        for l in range(1, d + 1):
            for i in range(n):
                b = GreenElement.basis(p, l, i)
                assert star(star(b)) == b
        for _ in range(5):
            a = random_element(p, rng, 0, 2)
            b = random_element(p, rng, 0, 2)
            assert star(multiply(a, b)) == multiply(star(a), star(b))


def test_radical_basis_pinned():
    p = TaftParams(4, 2)
    got = radical_basis(p)
    assert got == [
        GreenElement(p, {(2, 2): 1, (2, 0): -1}),
        GreenElement(p, {(2, 3): 1, (2, 1): -1}),
    ]


def test_radical_rank_and_square_zero():
    for n, d in GRID:
        p = TaftParams(n, d)
        basis = radical_basis(p)
        assert len(basis) == n - n // d
        for x in basis:
            for y in basis:
                assert multiply(x, y).is_zero()
        assert radical_generator_check(p)


def test_nilpotency_examples():
    p = TaftParams(4, 2)
    assert is_nilpotent(GreenElement(p, {(2, 2): 1, (2, 0): -1}))
    assert not is_nilpotent(GreenElement(p, {(1, 1): 1, (1, 0): -1}))
    assert is_nilpotent(GreenElement.zero(p))


def test_radical_span_membership():
    for n, d in ((4, 2), (6, 3), (8, 4)):
        p = TaftParams(n, d)
        rng = random.Random(n + d)
        basis = radical_basis(p)
        for _ in range(10):
            a = GreenElement.zero(p)
            for b in basis:
                a = a + rng.randint(-3, 3) * b
            assert in_radical_span(a)
            assert is_nilpotent(a)
        # shifting off the span by a unit breaks membership
        assert not in_radical_span(basis[0] + GreenElement.unit(p))


def test_grothendieck_simple_classes():
    for n, d in GRID:
        assert grothendieck_check(TaftParams(n, d))


def test_projective_quotient_roundtrip():
    for n, d in ((4, 2), (6, 3), (8, 4)):
        p = TaftParams(n, d)
        rng = random.Random(d * 17 + n)
        for _ in range(10):
            a = random_element(p, rng, -3, 3, layers=(1, d))
            img = projective_to_poly(a)
            assert projective_poly_to_basis(img) == a


def test_projective_rejects_middle_layers():
    p = TaftParams(6, 3)
    with pytest.raises(ValueError):
        projective_to_poly(GreenElement.basis(p, 2, 0))


def test_stable_quotient_kills_projectives():
    for n, d in ((6, 3), (8, 4)):
        p = TaftParams(n, d)
        for i in range(n):
            assert stable_to_poly(GreenElement.basis(p, d, i)).is_zero()
        assert not stable_to_poly(GreenElement.basis(p, 1, 1)).is_zero()


def test_quotient_kind_mismatch_rejected():
    p = TaftParams(4, 2)
    a = QuotientPoly.monomial(p, "green", 0, 1)
    b = QuotientPoly.monomial(p, "stable", 0, 0)
    with pytest.raises(ValueError):
        a + b
