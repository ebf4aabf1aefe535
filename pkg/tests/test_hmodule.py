import random
from collections import Counter

import pytest

from greenring.cyclotomic import CycNum
from greenring.hmodule import (CycMatrix, HModule, IndexPair, TaftParams,
                               build_module, decompose, direct_sum, dual,
                               standard_module, tensor)


def counter(params, *pairs):
    return Counter(params.pair(l, i) for l, i in pairs)


def test_params_validation():
    with pytest.raises(ValueError):
        TaftParams(7, 3)
    with pytest.raises(ValueError):
        TaftParams(4, 1)
    with pytest.raises(ValueError):
        TaftParams(1, 1)
    p = TaftParams(6, 3)
    assert p.m == 2
    assert p.q() == CycNum.root(6, 2)


def test_module_relations_verified_on_construction():
    # build_module must satisfy g^n=1, h^d=0, hg = q gh for every class
    for n, d in ((4, 2), (6, 3), (8, 4)):
        p = TaftParams(n, d)
        for l in range(1, d + 1):
            for i in range(n):
                mod = build_module(p, l, i)
                assert mod.dim == l


def test_bad_relation_rejected():
    p = TaftParams(4, 2)
    G = CycMatrix.diagonal(4, [CycNum.one(4), CycNum.one(4)])
    H = CycMatrix.from_entries(4, 2, {(1, 0): CycNum.one(4)})
    # with G = identity, hg = q gh forces h = 0
    with pytest.raises(ValueError):
        HModule(p, G, H)


def test_decompose_simple_modules():
    p = TaftParams(6, 3)
    for l in range(1, 4):
        for i in range(6):
            assert decompose(build_module(p, l, i)) == counter(p, (l, i))


def test_tensor_with_one_dimensional_twists():
    for n, d in ((4, 2), (6, 3)):
        p = TaftParams(n, d)
        for i in range(n):
            one = standard_module(p, 1, i)
            for l in range(1, d + 1):
                for r in range(n):
                    got = decompose(tensor(one, standard_module(p, l, r)))
                    assert got == counter(p, (l, (r + i) % n))


def test_tensor_pinned_examples():
    p = TaftParams(4, 2)
    got = decompose(tensor(standard_module(p, 2, 0), standard_module(p, 2, 0)))
    assert got == counter(p, (2, 0), (2, 2))

    p = TaftParams(6, 3)
    m20 = standard_module(p, 2, 0)
    assert decompose(tensor(m20, m20)) == counter(p, (3, 0), (1, 4))
    assert decompose(tensor(m20, standard_module(p, 3, 0))) == \
        counter(p, (3, 0), (3, 4))
    m30 = standard_module(p, 3, 0)
    assert decompose(tensor(m30, m30)) == counter(p, (3, 0), (3, 4), (3, 2))


def test_tensor_top_layer_rule():
    """M(d,i) (x) M(d,j) = sum_s M(d, i+j-sm) for s = 0..d-1."""
    for n, d in ((6, 2), (6, 3), (8, 4)):
        p = TaftParams(n, d)
        for i in range(0, n, 2):
            for j in range(0, n, 3):
                got = decompose(tensor(standard_module(p, d, i),
                                       standard_module(p, d, j)))
                want = counter(p, *[(d, (i + j - s * p.m) % n) for s in range(d)])
                assert got == want


def test_tensor_commutes_up_to_iso():
    rng = random.Random(11)
    for n, d in ((6, 3), (8, 4)):
        p = TaftParams(n, d)
        for _ in range(8):
            a = standard_module(p, rng.randint(1, d), rng.randrange(n))
            b = standard_module(p, rng.randint(1, d), rng.randrange(n))
            assert decompose(tensor(a, b)) == decompose(tensor(b, a))


def test_dual_pinned_and_involutive():
    p = TaftParams(4, 2)
    assert decompose(dual(standard_module(p, 2, 0))) == counter(p, (2, 2))

    for n, d in ((4, 2), (6, 3)):
        p = TaftParams(n, d)
        for l in range(1, d + 1):
            for i in range(n):
                mod = standard_module(p, l, i)
                assert decompose(dual(dual(mod))) == counter(p, (l, i))


def test_direct_sum_recovers_multiset():
    rng = random.Random(23)
    for n, d in ((6, 3), (12, 4)):
        p = TaftParams(n, d)
        for _ in range(6):
            count = rng.randint(2, 5)
            pairs = [(rng.randint(1, d), rng.randrange(n)) for _ in range(count)]
            summed = direct_sum([build_module(p, l, i) for l, i in pairs])
            assert summed.dim == sum(l for l, _ in pairs)
            assert decompose(summed) == counter(p, *pairs)


def test_decompose_conjugated_module():
    """A change of basis hides the weight structure; the generic
    eigenprojection path must still find the same decomposition."""
    p = TaftParams(4, 2)
    mod = direct_sum([build_module(p, 2, 0), build_module(p, 1, 1)])
    n, dim = 4, 3
    T = CycMatrix.from_entries(n, dim, {
        (0, 0): CycNum.one(n), (1, 1): CycNum.one(n), (2, 2): CycNum.one(n),
        (0, 1): CycNum.rational(n, 2), (0, 2): CycNum.root(n),
        (1, 2): CycNum.rational(n, -1),
    })
    Tinv = T.inverse()
    twisted = HModule(p, Tinv @ mod.G @ T, Tinv @ mod.H @ T)
    assert not twisted.G.is_diagonal()
    assert decompose(twisted) == counter(p, (2, 0), (1, 1))


def test_index_pair_normalization():
    p = TaftParams(6, 3)
    assert p.pair(2, -1) == IndexPair(2, 5)
    assert p.pair(2, 7) == IndexPair(2, 1)
    with pytest.raises(ValueError):
        p.pair(0, 0)
    with pytest.raises(ValueError):
        p.pair(4, 0)


def test_tensor_dimension_bookkeeping():
    p = TaftParams(8, 4)
    rng = random.Random(5)
    for _ in range(10):
        a = standard_module(p, rng.randint(1, 4), rng.randrange(8))
        b = standard_module(p, rng.randint(1, 4), rng.randrange(8))
        parts = decompose(tensor(a, b))
        assert sum(idx.l * mult for idx, mult in parts.items()) == a.dim * b.dim
