"""Characters and module classes of the complexified Green ring R(n, d).

R(n, d) = C (x) r(H(n, d)) is commutative of dimension n*d.  Its points
are the solutions of y^n = 1, (z - y^m - 1) * F_d(y^m, z) = 0: writing
w_k = exp(2*pi*i*k/n), the solution set is

    {(w_k, 2) : d | k}  union  {(w_k, sigma_kj) : 0 <= k < n, 1 <= j < d}

with sigma_kj = 2 * sqrt(w_k^m) * cos(j*pi/d), a total of nd - n + m
points, each an irreducible one-dimensional module.  For d not dividing
k there is in addition one two-dimensional indecomposable V(k) where z
acts by a size-2 Jordan block at 1 + w_k^m.  ``classify_R_module``
recognizes an arbitrary finite dimensional module as a direct sum of
these classes by numeric eigenspace splitting.
"""

from __future__ import annotations

import cmath
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .ring import to_poly

_DEDUP_TOL = 1e-9


@dataclass(frozen=True)
class SolutionPoint:
    """One point (lambda, mu) of the character variety, with provenance.

    j is None for the (w_k, 2) family and the root index 1..d-1 for the
    sigma family.
    """

    k: int
    j: int | None
    lam: complex
    mu: complex


def _omega(n, k):
    return cmath.exp(2j * cmath.pi * k / n)


def solve_system(params):
    """All solutions of the defining equations, deduplicated at 1e-9.

    Returns nd - n + m points ordered by k, with the mu = 2 point (when
    d divides k) preceding the sigma family.
    """
    n, d, m = params.n, params.d, params.m
    out = []
    for k in range(n):
        lam = _omega(n, k)
        group = []
        if k % d == 0:
            group.append(SolutionPoint(k, None, lam, 2.0 + 0j))
        root = cmath.sqrt(lam**m)
        for j in range(1, d):
            mu = 2 * root * math.cos(j * math.pi / d)
            if all(abs(mu - other.mu) > _DEDUP_TOL for other in group):
                group.append(SolutionPoint(k, j, lam, mu))
        out.extend(group)
    return out


def evaluate(a, point):
    """Value of the character at a ring element, via the presentation."""
    return to_poly(a).evaluate(point.lam, point.mu)


def vanishes_on_spectrum(a, tol=1e-8, points=None):
    """Whether every character kills the element; numeric radical test."""
    if points is None:
        points = solve_system(a.params)
    return all(abs(evaluate(a, pt)) <= tol for pt in points)


@dataclass(eq=False)
class RModuleClass:
    """A concrete matrix module over R(n, d) (or its projective quotient)."""

    kind: str
    k: int
    Y: np.ndarray
    Z: np.ndarray
    point: SolutionPoint | None = None

    @property
    def dim(self):
        return self.Y.shape[0]


def irreducibles(params):
    """The nd - n + m one-dimensional classes, one per solution point."""
    out = []
    for pt in solve_system(params):
        out.append(RModuleClass("one_dim", pt.k,
                                np.array([[pt.lam]]), np.array([[pt.mu]]), pt))
    return out


def two_dim_indecomposables(params):
    """The n - m classes V(k), d not dividing k: z has a Jordan block.

    y acts by w_k and z by [[1 + w_k^m, 1], [0, 1 + w_k^m]].
    """
    n, d, m = params.n, params.d, params.m
    out = []
    for k in range(n):
        if k % d == 0:
            continue
        lam = _omega(n, k)
        mu = 1 + lam**m
        Y = np.eye(2, dtype=complex) * lam
        Z = np.array([[mu, 1.0], [0.0, mu]], dtype=complex)
        out.append(RModuleClass("two_dim", k, Y, Z))
    return out


def green_relation_residual(params, Y, Z):
    """Max-entry residual of the defining matrix relations.

    Returns the largest absolute entry over the commutator [Y, Z],
    Y^n - 1 and (Z - Y^m - 1) * F_d(Y^m, Z).
    """
    n, d, m = params.n, params.d, params.m
    dim = Y.shape[0]
    eye = np.eye(dim, dtype=complex)
    ym = np.linalg.matrix_power(Y, m)
    fib = _fib_at(d, ym, Z, eye)
    rel = (Z - ym - eye) @ fib
    comm = Y @ Z - Z @ Y
    ypow = np.linalg.matrix_power(Y, n) - eye
    return float(max(np.abs(comm).max(), np.abs(ypow).max(), np.abs(rel).max()))


def _fib_at(s, ym, Z, eye):
    prev, cur = np.zeros_like(eye), eye.copy()
    for _ in range(s - 1):
        prev, cur = cur, Z @ cur - ym @ prev
    return cur if s >= 1 else prev


def _rank(mat, tol):
    if mat.size == 0:
        return 0
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0:
        return 0
    return int(np.sum(s > tol * max(1.0, s[0])))


def classify_R_module(params, Y, Z, tol=1e-7):
    """Decompose a pair of commuting matrices into known module classes.

    Splits by the exact eigenprojections of Y (Y^n = 1 forces
    diagonalizability), then reads off the Jordan structure of Z on each
    eigenspace.  Returns a Counter keyed by ('one_dim', k, j) and
    ('two_dim', k); anything inconsistent with the classified module
    list (mismatched eigenvalues, Jordan blocks of size 3 or more, or
    broken relations) raises ValueError.
    """
    n, d, m = params.n, params.d, params.m
    Y = np.asarray(Y, dtype=complex)
    Z = np.asarray(Z, dtype=complex)
    if Y.shape != Z.shape or Y.ndim != 2 or Y.shape[0] != Y.shape[1]:
        raise ValueError("need two square matrices of equal size")
    if green_relation_residual(params, Y, Z) > 1e-6:
        raise ValueError("matrices do not satisfy the module relations")
    dim = Y.shape[0]
    points = solve_system(params)
    powers = [np.eye(dim, dtype=complex)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ Y)
    out = Counter()
    covered = 0
    for k in range(n):
        proj = sum(_omega(n, -k * j) * powers[j] for j in range(n)) / n
        r = int(round(proj.trace().real))
        if r == 0:
            continue
        U, s, _ = np.linalg.svd(proj)
        B = U[:, :r]
        Zk = B.conj().T @ Z @ B
        if np.abs(Z @ B - B @ Zk).max() > 1e-6:
            raise ValueError("z does not preserve a y-eigenspace")
        refs = [pt for pt in points if pt.k == k]
        double_mu = 1 + _omega(n, k) ** m
        used = 0
        for pt in refs:
            N = Zk - pt.mu * np.eye(r)
            k1 = r - _rank(N, tol)
            if k1 == 0:
                continue
            k2 = r - _rank(N @ N, tol)
            k3 = r - _rank(N @ N @ N, tol)
            if k3 != k2:
                raise ValueError("Jordan block of size 3 or more; not a module")
            ones, twos = 2 * k1 - k2, k2 - k1
            if twos and (k % d == 0 or abs(pt.mu - double_mu) > 1e-6):
                raise ValueError("size-2 block at a simple character value")
            if ones:
                out[("one_dim", k, pt.j)] += ones
            if twos:
                out[("two_dim", k)] += twos
            used += k2
        if used != r:
            raise ValueError("eigenvalues of z outside the solution set")
        covered += r
    if covered != dim:
        raise ValueError("y-eigenvalues outside the n-th roots of unity")
    return out


def class_key(cls):
    """Counter key of a catalogued class, matching classify_R_module."""
    if cls.kind == "one_dim":
        return ("one_dim", cls.k, cls.point.j if cls.point else None)
    return ("two_dim", cls.k)


def block_census(params):
    """Counts of indecomposables and of blocks by dimension.

    nd indecomposable module classes in total; n - m blocks of dimension
    2 (each pairing a V(k) with the simple at (w_k, 1 + w_k^m)) and
    nd - 2(n - m) blocks of dimension 1.
    """
    n, d, m = params.n, params.d, params.m
    irr = len(irreducibles(params))
    two = len(two_dim_indecomposables(params))
    census = {
        "indecomposables": irr + two,
        "irreducible_count": irr,
        "two_dim_count": two,
        "blocks_dim_1": irr - two,
        "blocks_dim_2": two,
    }
    if irr != n * d - n + m or two != n - m:
        raise ArithmeticError("class counts disagree with the closed formulas")
    if census["indecomposables"] != n * d or census["blocks_dim_1"] != n * d - 2 * (n - m):
        raise ArithmeticError("block census disagrees with the closed formulas")
    return census


def projective_algebra_reps(params):
    """Matrix classes of the complexified projective class ring.

    Returns (one_dim, two_dim): n + m one-dimensional classes (z acts by
    0 for every k, and additionally by d when d divides k) and n - m
    two-dimensional ones where z is the nilpotent Jordan block.
    """
    n, d = params.n, params.d
    one_dim = []
    for k in range(n):
        lam = _omega(n, k)
        one_dim.append(RModuleClass("one_dim", k, np.array([[lam]]),
                                    np.array([[0.0 + 0j]])))
    for k in range(0, n, d):
        lam = _omega(n, k)
        one_dim.append(RModuleClass("one_dim", k, np.array([[lam]]),
                                    np.array([[complex(d)]])))
    two_dim = []
    for k in range(n):
        if k % d == 0:
            continue
        lam = _omega(n, k)
        Y = np.eye(2, dtype=complex) * lam
        Z = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        two_dim.append(RModuleClass("two_dim", k, Y, Z))
    return one_dim, two_dim


def projective_relation_residual(params, Y, Z):
    """Residual of y^n = 1 and z^2 = (1 + y^m + ... + y^((d-1)m)) * z."""
    n, d, m = params.n, params.d, params.m
    dim = Y.shape[0]
    eye = np.eye(dim, dtype=complex)
    geo = sum(np.linalg.matrix_power(Y, i * m) for i in range(d))
    rel = Z @ Z - geo @ Z
    comm = Y @ Z - Z @ Y
    ypow = np.linalg.matrix_power(Y, n) - eye
    return float(max(np.abs(comm).max(), np.abs(ypow).max(), np.abs(rel).max()))


def stable_semiprimitivity_check(params, tol=1e-8):
    """Numeric semiprimitivity of the stable quotient.

    Builds the n(d-1) x n(d-1) evaluation matrix of the monomial basis
    y^i z^b (b <= d-2) at the stable characters (w_k, sigma_kj) and
    checks it has full rank: smallest singular value above tol after
    scaling each row to unit norm.
    """
    n, d, m = params.n, params.d, params.m
    size = n * (d - 1)
    rows = []
    for k in range(n):
        lam = _omega(n, k)
        root = cmath.sqrt(lam**m)
        for j in range(1, d):
            mu = 2 * root * math.cos(j * math.pi / d)
            row = [lam**i * mu**b for b in range(d - 1) for i in range(n)]
            rows.append(row)
    mat = np.array(rows, dtype=complex)
    assert mat.shape == (size, size)
    norms = np.linalg.norm(mat, axis=1, keepdims=True)
    mat = mat / norms
    smin = np.linalg.svd(mat, compute_uv=False)[-1]
    return bool(smin > tol)
