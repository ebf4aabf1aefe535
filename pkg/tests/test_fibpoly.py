import cmath
import math
import random

import pytest

from greenring.fibpoly import (BivarPoly, fib_poly, fib_poly_closed, fib_roots,
                               fib_roots_eta, poly_str)


def test_first_few_polynomials():
    assert poly_str(fib_poly(0).terms) == "0"
    assert poly_str(fib_poly(1).terms) == "1"
    assert poly_str(fib_poly(2).terms) == "z"
    assert poly_str(fib_poly(3).terms) == "z^2 - y"
    assert poly_str(fib_poly(4).terms) == "z^3 - 2*y*z"
    assert poly_str(fib_poly(5).terms) == "z^4 - 3*y*z^2 + y^2"


def test_recurrence_matches_closed_form():
    for s in range(1, 31):
        assert fib_poly(s) == fib_poly_closed(s)


def test_specialize_to_integer_fibonacci():
    # F_s(-1, 1) walks the ordinary Fibonacci numbers
    fib = [0, 1]
    for _ in range(20):
        fib.append(fib[-1] + fib[-2])
    for s in range(20):
        assert fib_poly(s).evaluate(-1, 1) == fib[s]


def test_roots_vanish_on_unit_circle_samples():
    for s in range(2, 13):
        poly = fib_poly(s)
        for t in range(24):
            a = cmath.exp(2j * cmath.pi * t / 24)
            roots = fib_roots(a, s)
            assert len(roots) == s - 1
            for x in roots:
                assert abs(poly.evaluate(a, x)) < 1e-8


def test_roots_real_case():
    # at y=1 the roots are 2 cos(j pi / s), all real and distinct
    got = sorted(r.real for r in fib_roots(1, 5))
    want = sorted(2 * math.cos(j * math.pi / 5) for j in range(1, 5))
    for g, w in zip(got, want):
        assert abs(g - w) < 1e-12


def test_eta_parametrization():
    for s in (3, 5, 8):
        for a in (1, 1j, cmath.exp(0.7j)):
            for eta, x in fib_roots_eta(a, s):
                # eta is a 2s-th root of unity, not a square root of 1
                assert abs(eta ** (2 * s) - 1) < 1e-10
                assert abs(eta ** 2 - 1) > 1e-10
                assert abs(fib_poly(s).evaluate(a, x)) < 1e-8


def test_roots_reject_zero_y():
    with pytest.raises(ValueError):
        fib_roots(0, 4)


def test_bivar_arithmetic():
    y = BivarPoly.var_y()
    z = BivarPoly.var_z()
    p = (z - y) * (z + y)
    assert p == z * z - y * y
    assert p.evaluate(2, 3) == 9 - 4
    assert (p - p).is_zero()


def test_bivar_subst_y_power():
    p = fib_poly(4)  # z^3 - 2*y*z
    q = p.subst_y_power(3)
    assert q.terms == {(0, 3): 1, (3, 1): -2}


def test_z_degree():
    assert fib_poly(7).z_degree() == 6
    assert BivarPoly.zero().z_degree() == -1


def test_random_recurrence_step():
    """Spot check F_{s+2} = z F_{s+1} - y F_s at random numeric points."""
    rng = random.Random(7)
    z = BivarPoly.var_z()
    y = BivarPoly.var_y()
    for s in range(0, 12):
        lhs = fib_poly(s + 2)
        rhs = z * fib_poly(s + 1) - y * fib_poly(s)
        assert lhs == rhs
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        b = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        assert abs(lhs.evaluate(a, b) - rhs.evaluate(a, b)) < 1e-9
