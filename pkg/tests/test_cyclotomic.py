import random
from fractions import Fraction

import pytest

from greenring.cyclotomic import CycNum, IntPoly, cyclotomic_polynomial


def test_cyclotomic_polynomial_small_cases():
    # ascending coefficient tuples, pinned by hand
    expected = {
        1: (-1, 1),
        2: (1, 1),
        3: (1, 1, 1),
        4: (1, 0, 1),
        5: (1, 1, 1, 1, 1),
        6: (1, -1, 1),
        8: (1, 0, 0, 0, 1),
        9: (1, 0, 0, 1, 0, 0, 1),
        12: (1, 0, -1, 0, 1),
    }
    for n, coeffs in expected.items():
        assert cyclotomic_polynomial(n).coeffs == coeffs


def test_cyclotomic_product_over_divisors():
    """prod_{d | n} Phi_d(x) = x^n - 1."""
    for n in range(1, 25):
        prod = IntPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        target = IntPoly((-1,) + (0,) * (n - 1) + (1,))
        assert prod == target


def test_root_arithmetic_identities():
    w4 = CycNum.root(4)
    assert w4 * w4 == CycNum.rational(4, -1)
    assert w4 ** 4 == CycNum.one(4)

    w3 = CycNum.root(3)
    assert (w3 * w3 + w3 + 1).is_zero()

    for n in range(2, 13):
        total = CycNum.zero(n)
        for k in range(n):
            total = total + CycNum.root(n, k)
        assert total.is_zero()


def test_root_exponent_normalization():
    assert CycNum.root(6, 7) == CycNum.root(6, 1)
    assert CycNum.root(6, -1) == CycNum.root(6, 5)


def test_negative_power_is_inverse():
    w = CycNum.root(12, 5)
    assert w ** -1 == w.inverse()
    assert (w ** -3) * (w ** 3) == CycNum.one(12)


def test_inverse_on_random_elements():
    rng = random.Random(42)
    for n in (3, 4, 6, 8, 9, 12):
        for _ in range(12):
            a = CycNum.zero(n)
            for _ in range(rng.randint(1, 3)):
                a = a + rng.randint(-3, 3) * CycNum.root(n, rng.randrange(n))
            if a.is_zero():
                continue
            assert a * a.inverse() == CycNum.one(n)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(6).inverse()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        CycNum.root(4) + CycNum.root(6)


def test_equality_across_representations():
    # w^2 over order 4 and the integer -1 are the same field element
    assert CycNum.root(4, 2) == CycNum.rational(4, -1)
    # 1 + w + w^2 over order 3 reduces to zero, so 1 + w == -w^2
    assert 1 + CycNum.root(3) == -CycNum.root(3, 2)
    assert hash(CycNum.root(4, 2)) == hash(CycNum.rational(4, -1))


def test_rational_scalars():
    half = CycNum.rational(8, Fraction(1, 2))
    assert half + half == CycNum.one(8)
    assert (half * 2).is_one()


def test_embed_matches_exponential():
    import cmath
    for n in (3, 4, 5, 8, 12):
        for e in range(n):
            got = CycNum.root(n, e).embed()
            want = cmath.exp(2j * cmath.pi * e / n)
            assert abs(got - want) < 1e-12


def test_division_by_scalar():
    w = CycNum.root(6)
    assert (w / 2) * 2 == w
    assert w / Fraction(1, 3) == 3 * w
