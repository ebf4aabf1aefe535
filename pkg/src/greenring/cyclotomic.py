"""Exact arithmetic in the cyclotomic field Q(w), w = exp(2*pi*i/n).

Elements are stored as rational coordinate vectors over the spanning set
{w^0, ..., w^(n-1)}.  Addition and multiplication never leave that set
because exponents simply wrap modulo n (multiplication is a cyclic
convolution).  The set is not a basis, so equality and zero tests reduce
the coordinate polynomial modulo the n-th cyclotomic polynomial; the
reduced form is computed lazily and cached on the instance.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache


class IntPoly:
    """Univariate integer polynomial, dense coefficients, constant term first.

    >>> IntPoly([-1, 0, 1]) * IntPoly([1, 1])
    IntPoly('x^3 + x^2 - x - 1')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for ka, ca in enumerate(self.coeffs):
            if ca:
                for kb, cb in enumerate(other.coeffs):
                    out[ka + kb] += ca * cb
        return IntPoly(out)

    def __divmod__(self, other):
        """Exact long division; raises if the divisor is not monic.

        Only monic divisors appear in the cyclotomic recursion, which keeps
        every intermediate value an integer.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        db = other.degree
        while len(rem) - 1 >= db and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < db:
                break
            shift = len(rem) - 1 - db
            lead = rem[-1]
            quot[shift] = lead
            for k, c in enumerate(other.coeffs):
                rem[shift + k] -= lead * c
        return IntPoly(quot), IntPoly(rem)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _pretty(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                pw = var if k == 1 else f"{var}^{k}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPoly('{self._pretty()}')"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """The n-th cyclotomic polynomial as an IntPoly.

    Computed by exact division: x^n - 1 divided by the product of the
    cyclotomic polynomials of all proper divisors of n.

    >>> cyclotomic_polynomial(1)
    IntPoly('x - 1')
    >>> cyclotomic_polynomial(12)
    IntPoly('x^4 - x^2 + 1')
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    xn1 = IntPoly([-1] + [0] * (n - 1) + [1])
    if n == 1:
        return xn1
    denom = IntPoly([1])
    for k in range(1, n):
        if n % k == 0:
            denom = denom * cyclotomic_polynomial(k)
    quot, rem = divmod(xn1, denom)
    assert rem.is_zero()
    return quot


@lru_cache(maxsize=None)
def _power_table(n):
    """Reduction of w^k modulo Phi_n for k = 0..n-1, as integer tuples."""
    phi = cyclotomic_polynomial(n)
    deg = phi.degree
    table = []
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    for _ in range(n):
        table.append(tuple(cur))
        nxt = [0] + cur[:-1] if deg > 0 else []
        lead = cur[-1] if deg > 0 else 0
        if lead:
            for k in range(deg):
                nxt[k] -= lead * phi.coeffs[k]
        cur = nxt
    return tuple(table)


@lru_cache(maxsize=None)
def _unit_roots(n):
    return tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n))


def _norm_scalar(v):
    """Collapse integral Fractions back to int so hot loops stay on ints."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


class CycNum:
    """Exact element of Q(w) for w a fixed primitive n-th root of unity.

    >>> w = CycNum.root(4)
    >>> w * w == CycNum.rational(4, -1)
    True
    >>> sum((w**k for k in range(4)), CycNum.zero(4)).is_zero()
    True
    """

    __slots__ = ("order", "_c", "_red")

    def __init__(self, order, coords=None):
        if order < 1:
            raise ValueError("order must be a positive integer")
        self.order = order
        data = {}
        if coords:
            for e, v in coords.items():
                if v:
                    e %= order
                    cur = data.get(e)
                    data[e] = _norm_scalar(v if cur is None else cur + v)
                    if not data[e]:
                        del data[e]
        self._c = data
        self._red = None

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, {0: 1})

    @classmethod
    def root(cls, order, e=1):
        """The root-of-unity power w^e."""
        return cls(order, {e % order: 1})

    @classmethod
    def rational(cls, order, value):
        return cls(order, {0: Fraction(value)})

    @property
    def coeffs(self):
        """Dense coordinate tuple over the spanning set {w^0..w^(n-1)}."""
        return tuple(self._c.get(e, 0) for e in range(self.order))

    def reduced(self):
        """Canonical coordinates modulo Phi_n, as a length-n tuple.

        Only the first deg(Phi_n) entries can be nonzero; the tail is
        padding so the result lines up with ``coeffs``.
        """
        if self._red is None:
            n = self.order
            table = _power_table(n)
            deg = len(table[0])
            acc = [0] * deg
            for e, v in self._c.items():
                row = table[e]
                for k in range(deg):
                    if row[k]:
                        acc[k] += v * row[k]
            self._red = tuple(_norm_scalar(v) for v in acc) + (0,) * (n - deg)
        return self._red

    def is_zero(self):
        if not self._c:
            return True
        if len(self._c) == 1:
            return False
        return not any(self.reduced())

    def is_one(self):
        return self == CycNum.one(self.order)

    def as_monomial(self):
        """Return (e, c) if the raw coords are a single term, else None."""
        if len(self._c) == 1:
            return next(iter(self._c.items()))
        return None

    def _match(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum(self.order, {0: other})
        return None

    def __add__(self, other):
        other = self._match(other)
        if other is None:
            return NotImplemented
        data = dict(self._c)
        for e, v in other._c.items():
            cur = data.get(e)
            nv = _norm_scalar(v if cur is None else cur + v)
            if nv:
                data[e] = nv
            elif cur is not None:
                del data[e]
        out = CycNum(self.order)
        out._c = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = CycNum(self.order)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        other = self._match(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycNum(self.order)
            other = _norm_scalar(other)
            out = CycNum(self.order)
            out._c = {e: _norm_scalar(v * other) for e, v in self._c.items()}
            return out
        other = self._match(other)
        if other is None:
            return NotImplemented
        n = self.order
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        data = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = ea + eb
                if e >= n:
                    e -= n
                cur = data.get(e)
                data[e] = va * vb if cur is None else cur + va * vb
        out = CycNum(n)
        out._c = {e: _norm_scalar(v) for e, v in data.items() if v}
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        mono = self.as_monomial()
        if mono is not None:
            e, c = mono
            return CycNum(self.order, {(e * k) % self.order: c**k})
        acc = CycNum.one(self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        n = self.order
        mono = self.as_monomial()
        if mono is not None:
            e, c = mono
            return CycNum(n, {(-e) % n: Fraction(1, 1) / c})
        phi = [Fraction(c) for c in cyclotomic_polynomial(n).coeffs]
        deg = len(phi) - 1
        red = self.reduced()[:deg]
        r0, r1 = phi, [Fraction(c) for c in red]
        s0, s1 = [], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv_lead = 1 / r1[0]
                coords = {k: c * inv_lead for k, c in enumerate(s1)}
                return CycNum(n, coords)
            q, rem = _frac_divmod(r0, r1)
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
            r0, r1 = r1, rem

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        other = self._match(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum(self.order, {0: other})
        if not isinstance(other, CycNum):
            return NotImplemented
        if self.order != other.order:
            return False
        if self._c == other._c:
            return True
        return self.reduced() == other.reduced()

    def __hash__(self):
        return hash((self.order, self.reduced()))

    def embed(self):
        """Numeric value under w -> exp(2*pi*i/n)."""
        roots = _unit_roots(self.order)
        return sum((float(v) * roots[e] for e, v in self._c.items()), 0j)

    def _pretty(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                pw = "w" if e == 1 else f"w^{e}"
                body = pw if mag == 1 else f"{mag}*{pw}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"CycNum({self.order}, '{self._pretty()}')"


def _frac_divmod(a, b):
    """Long division for dense Fraction coefficient lists (constant first)."""
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(rem) - db, 1)
    while len(rem) - 1 >= db:
        if not rem[-1]:
            rem.pop()
            continue
        shift = len(rem) - 1 - db
        q = rem[-1] / lead
        quot[shift] = q
        for k in range(db + 1):
            rem[shift + k] -= q * b[k]
        rem.pop()
    return quot, rem


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for ka, ca in enumerate(a):
        if ca:
            for kb, cb in enumerate(b):
                out[ka + kb] += ca * cb
    return out


def _frac_sub(a, b):
    out = list(a) + [Fraction(0)] * max(len(b) - len(a), 0)
    for k, c in enumerate(b):
        out[k] -= c
    return out
