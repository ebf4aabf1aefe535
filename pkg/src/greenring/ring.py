"""The Green ring r(H(n, d)) on its basis of indecomposables.

Elements are integer combinations of the classes [M(l, i)].  Products can
be computed two independent ways: through the polynomial presentation

    r(H(n, d)) = Z[y, z] / (y^n - 1, (z - y^m - 1) * F_d(y^m, z))

with y = [M(1, -1)] and z = [M(2, 0)], or through the module oracle
(tensor the matrix models and decompose).  The class [M(l, i)] maps to
the polynomial y^((n-i) mod n) * F_l(y^m, z), which is triangular in the
z-degree, so the change of basis inverts exactly over the integers.

Two more quotients of the same polynomial ring are supported: the
projective class ring ideal (y^n - 1, z^2 - (1 + y^m + ... +
y^((d-1)m)) * z) where z stands for [M(d, 0)], and the stable quotient
(y^n - 1, F_d(y^m, z)) obtained by killing the projective classes.
"""

from __future__ import annotations

from functools import lru_cache

from .fibpoly import BivarPoly, fib_poly, poly_str
from .hmodule import IndexPair, decompose, standard_module, tensor

KINDS = ("green", "projective", "stable")


@lru_cache(maxsize=None)
def _rewrite(n, d, kind):
    """Reduction data (D, rew) for one ideal: z^D may be replaced by rew.

    D is the z-degree of the monic-in-z ideal generator and rew the term
    dict of z^D minus that generator.
    """
    m = n // d
    if kind == "green":
        zf = BivarPoly({(0, 1): 1, (m, 0): -1, (0, 0): -1})
        gen = zf * fib_poly(d).subst_y_power(m)
        D = d
    elif kind == "projective":
        gen = BivarPoly({(0, 2): 1}) - BivarPoly({(i * m, 1): 1 for i in range(d)})
        D = 2
    elif kind == "stable":
        gen = fib_poly(d).subst_y_power(m)
        D = d - 1
    else:
        raise ValueError(f"unknown ideal kind {kind!r}")
    assert gen.terms.get((0, D)) == 1
    rew = {key: -c for key, c in gen.terms.items() if key != (0, D)}
    return D, rew


def ideal_generator(params, kind):
    """The monic-in-z relation of one presentation, fully expanded.

    Together with y^n - 1 it cuts out the quotient the corresponding
    QuotientPoly arithmetic lives in.
    """
    D, rew = _rewrite(params.n, params.d, kind)
    terms = {(0, D): 1}
    for key, c in rew.items():
        terms[key] = terms.get(key, 0) - c
    return BivarPoly({k: v for k, v in terms.items() if v})


def _reduce_terms(n, D, rew, terms):
    """Canonical form: y-exponents mod n, z-degree below D."""
    layers = {}
    for (a, b), c in terms:
        if not c:
            continue
        lay = layers.setdefault(b, {})
        key = a % n
        lay[key] = lay.get(key, 0) + c
    while layers:
        b = max(layers)
        if b < D:
            break
        lay = layers.pop(b)
        for a, c in lay.items():
            if not c:
                continue
            for (ra, rb), rc in rew.items():
                tgt = layers.setdefault(b - D + rb, {})
                key = (a + ra) % n
                tgt[key] = tgt.get(key, 0) + c * rc
    out = {}
    for b in sorted(layers):
        for a in sorted(layers[b]):
            c = layers[b][a]
            if c:
                out[(a, b)] = c
    return out


class QuotientPoly:
    """Element of one of the three quotient rings, always canonical.

    The term dict maps (y_exp, z_exp) to a nonzero integer with
    0 <= y_exp < n and z_exp below the ideal's monic z-degree.
    """

    __slots__ = ("params", "kind", "terms")

    def __init__(self, params, kind, terms=None):
        if kind not in KINDS:
            raise ValueError(f"unknown ideal kind {kind!r}")
        self.params = params
        self.kind = kind
        D, rew = _rewrite(params.n, params.d, kind)
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        self.terms = _reduce_terms(params.n, D, rew, items)

    @classmethod
    def monomial(cls, params, kind, y_exp, z_exp, c=1):
        return cls(params, kind, {(y_exp, z_exp): c})

    @classmethod
    def zero(cls, params, kind):
        return cls(params, kind)

    @classmethod
    def one(cls, params, kind):
        return cls(params, kind, {(0, 0): 1})

    def _like(self, terms):
        out = QuotientPoly.__new__(QuotientPoly)
        out.params = self.params
        out.kind = self.kind
        out.terms = terms
        return out

    def _check(self, other):
        if self.params != other.params or self.kind != other.kind:
            raise ValueError("mixed quotient rings")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, QuotientPoly):
            return NotImplemented
        return (self.params, self.kind, self.terms) == (other.params, other.kind, other.terms)

    def __hash__(self):
        return hash((self.params, self.kind, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
        return self._like(out)

    def __neg__(self):
        return self._like({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self._like({})
            return self._like({key: c * other for key, c in self.terms.items()})
        self._check(other)
        acc = {}
        for (ay, az), ac in self.terms.items():
            for (by, bz), bc in other.terms.items():
                key = (ay + by, az + bz)
                acc[key] = acc.get(key, 0) + ac * bc
        D, rew = _rewr_of(self)
        return self._like(_reduce_terms(self.params.n, D, rew, acc.items()))

    __rmul__ = __mul__

    def evaluate(self, y, z):
        """Numeric value at a point (y, z); exact integers in, complex out."""
        return sum(c * y**ay * z**az for (ay, az), c in self.terms.items())

    def __repr__(self):
        return f"QuotientPoly({self.kind}, '{poly_str(self.terms)}')"


def _rewr_of(qp):
    return _rewrite(qp.params.n, qp.params.d, qp.kind)


class GreenElement:
    """Integer combination of basis classes [M(l, i)]."""

    __slots__ = ("params", "coeffs")

    def __init__(self, params, coeffs=None):
        self.params = params
        data = {}
        if coeffs:
            for key, c in coeffs.items():
                if not c:
                    continue
                idx = key if isinstance(key, IndexPair) else params.pair(*key)
                idx = params.pair(idx.l, idx.i)
                data[idx] = data.get(idx, 0) + c
                if not data[idx]:
                    del data[idx]
        self.coeffs = data

    @classmethod
    def zero(cls, params):
        return cls(params)

    @classmethod
    def unit(cls, params):
        return cls(params, {(1, 0): 1})

    @classmethod
    def basis(cls, params, l, i):
        return cls(params, {(l, i): 1})

    def items(self):
        """Coefficients in canonical order: l-major, then i."""
        return sorted(self.coeffs.items())

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.params != other.params:
            raise ValueError("parameter mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
        res = GreenElement(self.params)
        res.coeffs = out
        return res

    def __neg__(self):
        res = GreenElement(self.params)
        res.coeffs = {key: -c for key, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            res = GreenElement(self.params)
            if other:
                res.coeffs = {key: c * other for key, c in self.coeffs.items()}
            return res
        if isinstance(other, GreenElement):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GreenElement):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.params, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (l, i), c in self.items():
            body = f"M({l},{i})"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


@lru_cache(maxsize=None)
def _basis_poly_terms(n, d, l, i):
    """Canonical green terms of [M(l, i)] = y^((n-i) mod n) * F_l(y^m, z)."""
    m = n // d
    shift = (n - i) % n
    fib = fib_poly(l).subst_y_power(m)
    D, rew = _rewrite(n, d, "green")
    raw = [((a + shift, b), c) for (a, b), c in fib.terms.items()]
    return _reduce_terms(n, D, rew, raw)


def basis_to_poly(params, l, i=None):
    """Polynomial presentation image of a single class [M(l, i)]."""
    if i is None:
        l, i = l
    idx = params.pair(l, i)
    qp = QuotientPoly.__new__(QuotientPoly)
    qp.params = params
    qp.kind = "green"
    qp.terms = dict(_basis_poly_terms(params.n, params.d, idx.l, idx.i))
    return qp


def to_poly(a):
    """Green presentation image of an arbitrary element, extended linearly."""
    acc = {}
    n, d = a.params.n, a.params.d
    for (l, i), c in a.coeffs.items():
        for key, v in _basis_poly_terms(n, d, l, i).items():
            acc[key] = acc.get(key, 0) + c * v
    qp = QuotientPoly.__new__(QuotientPoly)
    qp.params = a.params
    qp.kind = "green"
    qp.terms = {key: c for key, c in acc.items() if c}
    return qp


def poly_to_basis(qp):
    """Inverse of the presentation map on the green quotient.

    Peels the top z-degree: the classes with l = j+1 are the only basis
    polynomials reaching z^j, and their leading y-coefficient is the
    single monomial y^((n-i) mod n), so the change of basis is triangular
    with unit diagonal.
    """
    if qp.kind != "green":
        raise ValueError("only the green quotient maps back to the basis")
    params = qp.params
    n, d = params.n, params.d
    rest = dict(qp.terms)
    out = {}
    for j in range(d - 1, -1, -1):
        level = [(a, c) for (a, b), c in rest.items() if b == j]
        for a, c in level:
            idx = IndexPair(j + 1, (n - a) % n)
            out[idx] = out.get(idx, 0) + c
            for key, v in _basis_poly_terms(n, d, idx.l, idx.i).items():
                rest[key] = rest.get(key, 0) - c * v
                if not rest[key]:
                    del rest[key]
    assert not rest, "presentation basis failed to span"
    res = GreenElement(params)
    res.coeffs = {key: c for key, c in out.items() if c}
    return res


def multiply(a, b, path="poly"):
    """Product of two elements via the chosen route.

     * ``poly``   multiply presentation images and convert back;
    * ``oracle`` tensor the matrix models of the basis classes pairwise
      and decompose, requiring nonnegative coefficients.
    """
    a._check(b)
    if path == "poly":
        return poly_to_basis(to_poly(a) * to_poly(b))
    if path != "oracle":
        raise ValueError(f"unknown path {path!r}")
    if any(c < 0 for c in a.coeffs.values()) or any(c < 0 for c in b.coeffs.values()):
        raise ValueError("oracle path needs nonnegative coefficients")
    params = a.params
    acc = {}
    for ka, ca in a.coeffs.items():
        ma = standard_module(params, *ka)
        for kb, cb in b.coeffs.items():
            parts = decompose(tensor(ma, standard_module(params, *kb)))
            for idx, mult in parts.items():
                acc[idx] = acc.get(idx, 0) + ca * cb * mult
    res = GreenElement(params)
    res.coeffs = {key: c for key, c in acc.items() if c}
    return res


def star(a):
    """The duality involution: y -> y^(n-1), z -> y^(n-m) * z."""
    params = a.params
    n, m = params.n, params.m
    img = {}
    for (ay, az), c in to_poly(a).terms.items():
        key = ((ay * (n - 1) + az * (n - m)) % n, az)
        img[key] = img.get(key, 0) + c
    return poly_to_basis(QuotientPoly(params, "green", img))


def radical_basis(params):
    """Z-basis of the Jacobson radical: differences of top-layer classes.

    The n - m elements [M(d, im+j)] - [M(d, (i-1)m+j)] for 1 <= i <= d-1
    and 0 <= j < m.
    """
    n, d, m = params.n, params.d, params.m
    out = []
    for i in range(1, d):
        for j in range(m):
            out.append(GreenElement(params, {(d, i * m + j): 1,
                                             (d, (i - 1) * m + j): -1}))
    return out


def is_nilpotent(a):
    """Exact nilpotency test; the radical squares to zero, so x*x = 0."""
    return multiply(a, a, "poly").is_zero()


def in_radical_span(a):
    """Whether an element lies in the integer span of the radical basis.

    That span is exactly the set of combinations of top-layer classes
    [M(d, *)] whose coefficients sum to zero within each residue class
    of the index modulo m.
    """
    m = a.params.m
    sums = {}
    for (l, i), c in a.coeffs.items():
        if l != a.params.d:
            return False
        r = i % m
        sums[r] = sums.get(r, 0) + c
    return all(v == 0 for v in sums.values())


def radical_generator_check(params):
    """Certify the radical is the principal ideal of ([M(1,m)] - 1)[M(d,0)].

    Checks [M(d, im+j)] - [M(d, (i-1)m+j)] equals
    [M(1, (i-1)m+j)] * ([M(1, m)] - [M(1, 0)]) * [M(d, 0)] for every
    radical basis element.
    """
    n, d, m = params.n, params.d, params.m
    gen = multiply(GreenElement(params, {(1, m): 1, (1, 0): -1}),
                   GreenElement.basis(params, d, 0))
    for i in range(1, d):
        for j in range(m):
            lhs = GreenElement(params, {(d, i * m + j): 1, (d, (i - 1) * m + j): -1})
            rhs = multiply(GreenElement.basis(params, 1, (i - 1) * m + j), gen)
            if lhs != rhs:
                return False
    return True


def grothendieck_check(params):
    """The simples multiply like the group ring of Z_n."""
    n = params.n
    for aexp in range(n):
        for bexp in range(n):
            prod = multiply(GreenElement.basis(params, 1, aexp),
                            GreenElement.basis(params, 1, bexp))
            if prod != GreenElement.basis(params, 1, (aexp + bexp) % n):
                return False
    return True


def projective_to_poly(a):
    """Projective class ring image; support must lie in the p-basis.

    The p-basis consists of the simples [M(1, i)] mapping to y^((n-i)
    mod n) and the projectives [M(d, i)] mapping to y^((n-i) mod n) * z.
    """
    params = a.params
    n, d = params.n, params.d
    terms = {}
    for (l, i), c in a.coeffs.items():
        if l == 1:
            key = ((n - i) % n, 0)
        elif l == d:
            key = ((n - i) % n, 1)
        else:
            raise ValueError("element is outside the projective class ring")
        terms[key] = terms.get(key, 0) + c
    return QuotientPoly(params, "projective", terms)


def projective_poly_to_basis(qp):
    """Inverse of the projective presentation on its 2n monomials."""
    if qp.kind != "projective":
        raise ValueError("expected a projective quotient element")
    params = qp.params
    n, d = params.n, params.d
    out = {}
    for (a, b), c in qp.terms.items():
        out[IndexPair(1 if b == 0 else d, (n - a) % n)] = c
    res = GreenElement(params)
    res.coeffs = out
    return res


def stable_to_poly(a):
    """Image in the stable quotient, where the projectives vanish."""
    params = a.params
    n, d, m = params.n, params.d, params.m
    acc = []
    for (l, i), c in a.coeffs.items():
        shift = (n - i) % n
        for (fa, fb), fc in fib_poly(l).subst_y_power(m).terms.items():
            acc.append((((fa + shift), fb), c * fc))
    return QuotientPoly(params, "stable", acc)
