"""Finite dimensional modules over the generalized Taft algebra H(n, d).

H(n, d) is generated by a grouplike g of order n and a skew-primitive h
with h^d = 0 and h*g = q*g*h, where q = w^m, m = n/d and w is a primitive
n-th root of unity.  A module is stored as the pair of exact matrices for
g and h over Q(w); the defining relations are checked on construction.

The indecomposables are the modules M(l, i) for 1 <= l <= d and i mod n:
g acts on the basis vector v_j by w^i * q^(-j) and h shifts v_j to
v_{j+1}, truncating at the top.  ``decompose`` recovers the multiset of
indecomposable factors of any module by splitting into g-eigenspaces and
peeling maximal h-chains, which is exact over Q(w).
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple

from .cyclotomic import CycNum


class IndexPair(NamedTuple):
    """Label (l, i) of the indecomposable M(l, i); i is kept in 0..n-1."""

    l: int
    i: int


@dataclass(frozen=True)
class TaftParams:
    """The pair (n, d) with d dividing n; fixes w, q = w^(n/d) and m = n/d."""

    n: int
    d: int

    def __post_init__(self):
        if self.n < 2 or self.d < 2:
            raise ValueError("need n >= 2 and d >= 2")
        if self.n % self.d:
            raise ValueError("d must divide n")

    @property
    def m(self):
        return self.n // self.d

    def omega(self, e=1):
        return CycNum.root(self.n, e)

    def q(self, e=1):
        return CycNum.root(self.n, (e * self.m) % self.n)

    def pair(self, l, i):
        """Validated, normalized index pair for M(l, i)."""
        if not 1 <= l <= self.d:
            raise ValueError(f"layer length {l} outside 1..{self.d}")
        return IndexPair(int(l), int(i) % self.n)


class CycMatrix:
    """Square matrix over Q(w), stored column-major and sparse."""

    __slots__ = ("order", "dim", "cols")

    def __init__(self, order, dim, cols=None):
        self.order = order
        self.dim = dim
        if cols is None:
            cols = tuple({} for _ in range(dim))
        self.cols = cols

    @classmethod
    def zeros(cls, order, dim):
        return cls(order, dim)

    @classmethod
    def identity(cls, order, dim):
        one = CycNum.one(order)
        return cls(order, dim, tuple({c: one} for c in range(dim)))

    @classmethod
    def diagonal(cls, order, entries):
        cols = tuple({c: e} if not e.is_zero() else {} for c, e in enumerate(entries))
        return cls(order, len(entries), cols)

    @classmethod
    def from_entries(cls, order, dim, entries):
        cols = [dict() for _ in range(dim)]
        for (r, c), v in entries.items():
            if not v.is_zero():
                cols[c][r] = v
        return cls(order, dim, tuple(cols))

    def entry(self, r, c):
        return self.cols[c].get(r, CycNum.zero(self.order))

    def apply(self, vec):
        """Image of a sparse column vector {row: CycNum}."""
        acc = {}
        for c, x in vec.items():
            col = self.cols[c]
            for r, a in col.items():
                cur = acc.get(r)
                acc[r] = a * x if cur is None else cur + a * x
        return {r: v for r, v in acc.items() if not v.is_zero()}

    def __matmul__(self, other):
        if self.order != other.order or self.dim != other.dim:
            raise ValueError("matrix shape or order mismatch")
        return CycMatrix(self.order, self.dim,
                         tuple(self.apply(col) for col in other.cols))

    def __add__(self, other):
        cols = []
        for ca, cb in zip(self.cols, other.cols):
            col = dict(ca)
            for r, v in cb.items():
                cur = col.get(r)
                nv = v if cur is None else cur + v
                if nv.is_zero():
                    col.pop(r, None)
                else:
                    col[r] = nv
            cols.append(col)
        return CycMatrix(self.order, self.dim, tuple(cols))

    def __neg__(self):
        return CycMatrix(self.order, self.dim,
                         tuple({r: -v for r, v in col.items()} for col in self.cols))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        if isinstance(a, (int, Fraction)):
            a = CycNum(self.order, {0: a})
        cols = tuple({r: a * v for r, v in col.items()} for col in self.cols)
        out = CycMatrix(self.order, self.dim, cols)
        return out if not a.is_zero() else CycMatrix.zeros(self.order, self.dim)

    def transpose(self):
        cols = [dict() for _ in range(self.dim)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                cols[r][c] = v
        return CycMatrix(self.order, self.dim, tuple(cols))

    def kron(self, other):
        dim = self.dim * other.dim
        cols = [dict() for _ in range(dim)]
        for ca, cola in enumerate(self.cols):
            for cb, colb in enumerate(other.cols):
                col = cols[ca * other.dim + cb]
                for ra, va in cola.items():
                    for rb, vb in colb.items():
                        col[ra * other.dim + rb] = va * vb
        return CycMatrix(self.order, dim, tuple(cols))

    def matpow(self, k):
        if k < 0:
            raise ValueError("negative matrix power")
        if self.is_diagonal():
            return CycMatrix(self.order, self.dim,
                             tuple({c: col[c] ** k} if c in col else {}
                                   for c, col in enumerate(self.cols)))
        acc = CycMatrix.identity(self.order, self.dim)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return acc

    def is_diagonal(self):
        return all(all(r == c for r in col) for c, col in enumerate(self.cols))

    def is_zero(self):
        return all(all(v.is_zero() for v in col.values()) for col in self.cols)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.order != other.order or self.dim != other.dim:
            return False
        for ca, cb in zip(self.cols, other.cols):
            for r in set(ca) | set(cb):
                va, vb = ca.get(r), cb.get(r)
                if va is None:
                    if not vb.is_zero():
                        return False
                elif vb is None:
                    if not va.is_zero():
                        return False
                elif va != vb:
                    return False
        return True

    def inverse(self):
        """Dense Gaussian elimination over Q(w); raises if singular."""
        n, dim = self.order, self.dim
        zero = CycNum.zero(n)
        aug = [[self.entry(r, c) for c in range(dim)] +
               [CycNum.one(n) if k == r else zero for k in range(dim)]
               for r in range(dim)]
        for c in range(dim):
            piv = next((r for r in range(c, dim) if not aug[r][c].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [v * inv for v in aug[c]]
            for r in range(dim):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
        entries = {}
        for r in range(dim):
            for c in range(dim):
                v = aug[r][dim + c]
                if not v.is_zero():
                    entries[(r, c)] = v
        return CycMatrix.from_entries(n, dim, entries)

    def __repr__(self):
        return f"CycMatrix(order={self.order}, dim={self.dim})"


class HModule:
    """An H(n, d)-module given by exact matrices for g and h.

    Raises ValueError unless g^n = 1, h^d = 0 and h*g = q*g*h hold.
    """

    __slots__ = ("params", "dim", "G", "H")

    def __init__(self, params, G, H):
        if G.dim != H.dim or G.order != params.n or H.order != params.n:
            raise ValueError("matrix shape or order mismatch")
        self.params = params
        self.dim = G.dim
        self.G = G
        self.H = H
        self._validate()

    def _validate(self):
        p = self.params
        if not self.G.matpow(p.n) == CycMatrix.identity(p.n, self.dim):
            raise ValueError("relation g^n = 1 fails")
        if not self.H.matpow(p.d).is_zero():
            raise ValueError(f"relation h^{p.d} = 0 fails")
        if not (self.H @ self.G) == (self.G @ self.H).scale(p.q()):
            raise ValueError("relation h*g = q*g*h fails")

    def __repr__(self):
        p = self.params
        return f"HModule(n={p.n}, d={p.d}, dim={self.dim})"


def build_module(params, l, i=None):
    """The indecomposable M(l, i); accepts (l, i) or an IndexPair.

    g acts diagonally with entries w^i * q^(-j) and h shifts basis vector
    j to j+1 for j < l-1.
    """
    if i is None:
        l, i = l
    idx = params.pair(l, i)
    n, m = params.n, params.m
    gdiag = [CycNum.root(n, (idx.i - j * m) % n) for j in range(idx.l)]
    hcols = [({j + 1: CycNum.one(n)} if j < idx.l - 1 else {}) for j in range(idx.l)]
    return HModule(params, CycMatrix.diagonal(n, gdiag),
                   CycMatrix(n, idx.l, tuple(hcols)))


def tensor(a, b):
    """Tensor product module; h acts by 1 (x) h + h (x) g."""
    if a.params != b.params:
        raise ValueError("parameter mismatch")
    G = a.G.kron(b.G)
    H = CycMatrix.identity(a.params.n, a.dim).kron(b.H) + a.H.kron(b.G)
    return HModule(a.params, G, H)


def dual(a):
    """Dual module via the antipode: x acts on functionals through S(x).

    S(g) = g^(n-1) and S(h) = -q^(-1) * g^(n-1) * h, so the new matrices
    are the transposes of those two images.
    """
    p = a.params
    gn1 = a.G.matpow(p.n - 1)
    minus_qinv = -CycNum.root(p.n, (p.n - p.m) % p.n)
    return HModule(p, gn1.transpose(), (gn1 @ a.H).scale(minus_qinv).transpose())


def direct_sum(mods):
    """Block-diagonal sum of a list of modules over equal parameters."""
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    p = mods[0].params
    if any(md.params != p for md in mods):
        raise ValueError("parameter mismatch")
    dim = sum(md.dim for md in mods)
    gcols, hcols = [], []
    off = 0
    for md in mods:
        for col in md.G.cols:
            gcols.append({r + off: v for r, v in col.items()})
        for col in md.H.cols:
            hcols.append({r + off: v for r, v in col.items()})
        off += md.dim
    return HModule(p, CycMatrix(p.n, dim, tuple(gcols)),
                   CycMatrix(p.n, dim, tuple(hcols)))


class _RowSpace:
    """Growing reduced row space over Q(w) for membership tests.

    Rows are kept forward-reduced with monic pivots; the pivot of a row is
    the smallest index in its support, so a single ascending elimination
    pass reduces any vector.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}

    def residual(self, vec):
        v = {c: x for c, x in vec.items() if not x.is_zero()}
        for p in sorted(self.rows):
            x = v.get(p)
            if x is None:
                continue
            del v[p]
            if x.is_zero():
                continue
            for c, rc in self.rows[p].items():
                if c == p:
                    continue
                cur = v.get(c)
                nv = -(x * rc) if cur is None else cur - x * rc
                if nv.is_zero():
                    v.pop(c, None)
                else:
                    v[c] = nv
        return v

    def contains(self, vec):
        return not self.residual(vec)

    def add(self, vec):
        r = self.residual(vec)
        if not r:
            return False
        piv = min(r)
        pval = r[piv]
        mono = pval.as_monomial()
        if mono is not None:
            e, c = mono
            inv = CycNum(pval.order, {(-e) % pval.order: 1 if c == 1 else Fraction(1) / c})
        else:
            inv = pval.inverse()
        self.rows[piv] = {c: x * inv for c, x in r.items()}
        return True


def _weight_indices(params, G):
    """Eigenvalue exponents of a diagonal g-matrix, one per basis vector."""
    n = params.n
    out = []
    for t in range(G.dim):
        e = G.entry(t, t)
        mono = e.as_monomial()
        i = None
        if mono is not None:
            exp, c = mono
            if c == 1:
                i = exp
            elif c == -1 and n % 2 == 0:
                i = (exp + n // 2) % n
        if i is None:
            i = next((k for k in range(n) if e == CycNum.root(n, k)), None)
            if i is None:
                raise ValueError("diagonal entry is not a root of unity")
        out.append(i)
    return out


def _eigenbasis(mod):
    """Exact simultaneous g-eigenbasis for a non-diagonal g-matrix.

    Applies the projections (1/n) * sum_j w^(-i*j) g^j and keeps a maximal
    independent set of projected columns.  Returns the change of basis T
    (columns are eigenvectors) and the weight exponent of each column.
    """
    p = mod.params
    n, dim = p.n, mod.dim
    scale = Fraction(1, n)
    powers = []
    acc = CycMatrix.identity(n, dim)
    for _ in range(n):
        powers.append(acc)
        acc = acc @ mod.G
    cols, weights = [], []
    space = _RowSpace()
    for i in range(n):
        proj = CycMatrix.zeros(n, dim)
        for j, gj in enumerate(powers):
            proj = proj + gj.scale(CycNum.root(n, (-i * j) % n))
        proj = proj.scale(scale)
        for col in proj.cols:
            col = {r: v for r, v in col.items() if not v.is_zero()}
            if col and space.add(col):
                cols.append(col)
                weights.append(i)
    if len(cols) != dim:
        raise ValueError("g-matrix is not diagonalizable; relations violated")
    return CycMatrix(n, dim, tuple(cols)), weights


def decompose(mod):
    """Multiset of indecomposable factors of a module, as a Counter.

    The module splits into exact g-eigenspaces (for the diagonal matrices
    produced by the constructors above, the projections just read off the
    diagonal).  Inside the eigenspace decomposition, vectors of maximal
    h-height are peeled one chain at a time: the chain v, hv, ..., of a
    maximal-height weight vector spans a direct summand M(height, weight),
    and the peeling recurses on the quotient, realized as reduction
    modulo the growing row space of recorded chain vectors.

    >>> p = TaftParams(4, 2)
    >>> decompose(tensor(build_module(p, 2, 0), build_module(p, 2, 0)))
    Counter({IndexPair(l=2, i=0): 1, IndexPair(l=2, i=2): 1})
    """
    p = mod.params
    one = CycNum.one(p.n)
    if mod.G.is_diagonal():
        H = mod.H
        weights = _weight_indices(p, mod.G)
    else:
        T, weights = _eigenbasis(mod)
        H = T.inverse() @ mod.H @ T
    chains = []
    for t in range(mod.dim):
        vecs = [{t: one}]
        while len(vecs) <= p.d:
            nxt = H.apply(vecs[-1])
            if not nxt:
                break
            vecs.append(nxt)
        chains.append(vecs)
    heap = [(-len(vecs), t) for t, vecs in enumerate(chains)]
    heapq.heapify(heap)
    space = _RowSpace()
    out = Counter()
    covered = 0
    while heap and covered < mod.dim:
        h, t = heapq.heappop(heap)
        h = -h
        vecs = chains[t]
        while h > 0 and space.contains(vecs[h - 1]):
            h -= 1
        if h == 0:
            continue
        if heap and h < -heap[0][0]:
            heapq.heappush(heap, (-h, t))
            continue
        for u in range(h):
            added = space.add(vecs[u])
            assert added, "chain vectors must stay independent"
        out[IndexPair(h, weights[t])] += 1
        covered += h
    assert covered == mod.dim, "decomposition must cover the module"
    return out


@lru_cache(maxsize=None)
def _cached_module(n, d, l, i):
    return build_module(TaftParams(n, d), l, i)


def standard_module(params, l, i):
    """Cached M(l, i); the instances are immutable and shareable."""
    idx = params.pair(l, i)
    return _cached_module(params.n, params.d, idx.l, idx.i)
