"""Generalized Fibonacci polynomials F_s(y, z) and their root families.

The sequence is defined by F_0 = 0, F_1 = 1 and the two-term recurrence
F_{s+2} = z*F_{s+1} - y*F_s, so F_2 = z, F_3 = z^2 - y and so on.  For a
fixed nonzero value a of y, F_s(a, x) has the s-1 simple roots
2*sqrt(a)*cos(j*pi/s), j = 1..s-1.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache


class BivarPoly:
    """Integer polynomial in two variables y, z as a sparse term dict."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, c in terms.items():
                if c:
                    data[key] = data.get(key, 0) + c
                    if not data[key]:
                        del data[key]
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def var_y(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_z(cls):
        return cls({(0, 1): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
        res = BivarPoly()
        res.terms = out
        return res

    def __neg__(self):
        res = BivarPoly()
        res.terms = {key: -c for key, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return BivarPoly()
            res = BivarPoly()
            res.terms = {key: c * other for key, c in self.terms.items()}
            return res
        out = {}
        for (ay, az), ac in self.terms.items():
            for (by, bz), bc in other.terms.items():
                key = (ay + by, az + bz)
                out[key] = out.get(key, 0) + ac * bc
        res = BivarPoly()
        res.terms = {key: c for key, c in out.items() if c}
        return res

    __rmul__ = __mul__

    def subst_y_power(self, m):
        """The polynomial with y replaced by y^m."""
        res = BivarPoly()
        res.terms = {(ay * m, az): c for (ay, az), c in self.terms.items()}
        return res

    def evaluate(self, y, z):
        return sum(c * y**ay * z**az for (ay, az), c in self.terms.items())

    def z_degree(self):
        return max((az for (_, az) in self.terms), default=-1)

    def __repr__(self):
        return f"BivarPoly({poly_str(self.terms)!r})"


def poly_str(terms, yvar="y", zvar="z"):
    """Readable form of a sparse (y_exp, z_exp) -> coeff term dict."""
    if not terms:
        return "0"
    parts = []
    for (ay, az) in sorted(terms, key=lambda k: (-k[1], k[0])):
        c = terms[(ay, az)]
        factors = []
        if ay:
            factors.append(yvar if ay == 1 else f"{yvar}^{ay}")
        if az:
            factors.append(zvar if az == 1 else f"{zvar}^{az}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        else:
            body = "*".join(factors)
            if mag != 1:
                body = f"{mag}*{body}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


@lru_cache(maxsize=None)
def fib_poly(s):
    """F_s(y, z) from the recurrence F_{s+2} = z*F_{s+1} - y*F_s.

    >>> fib_poly(4)
    BivarPoly('z^3 - 2*y*z')
    """
    if s < 0:
        raise ValueError("index must be nonnegative")
    if s == 0:
        return BivarPoly.zero()
    prev, cur = BivarPoly.zero(), BivarPoly.const(1)
    y, z = BivarPoly.var_y(), BivarPoly.var_z()
    for _ in range(s - 1):
        prev, cur = cur, z * cur - y * prev
    return cur


def fib_poly_closed(s):
    """Closed form: sum of (-1)^i * C(s-1-i, i) * y^i * z^(s-1-2i).

    Valid for s >= 1; at s = 1 the sum is the single constant term 1.
    """
    if s < 1:
        raise ValueError("closed form needs index >= 1")
    terms = {}
    for i in range((s - 1) // 2 + 1):
        terms[(i, s - 1 - 2 * i)] = (-1) ** i * math.comb(s - 1 - i, i)
    return BivarPoly(terms)


def fib_roots(a, s):
    """All s-1 roots of x -> F_s(a, x): 2*sqrt(a)*cos(j*pi/s), j = 1..s-1.

    Uses the principal branch of the square root.  The root multiset does
    not depend on the branch (negating sqrt(a) maps root j to root s-j).
    """
    if s < 2:
        raise ValueError("root family needs index >= 2")
    if a == 0:
        raise ValueError("y value must be nonzero")
    r = cmath.sqrt(a)
    return [2 * r * math.cos(j * math.pi / s) for j in range(1, s)]


def fib_roots_eta(a, s):
    """Root list paired with the 2s-th roots of unity that produce it.

    Returns [(eta_j, x_j)] where eta_j = exp(i*j*pi/s) and
    x_j = sqrt(a) * (eta_j + 1/eta_j); each eta_j satisfies eta^(2s) = 1
    but eta^2 != 1, and x_j matches fib_roots(a, s) entrywise.
    """
    if s < 2:
        raise ValueError("root family needs index >= 2")
    if a == 0:
        raise ValueError("y value must be nonzero")
    r = cmath.sqrt(a)
    out = []
    for j in range(1, s):
        eta = cmath.exp(1j * j * math.pi / s)
        out.append((eta, r * (eta + 1 / eta)))
    return out
