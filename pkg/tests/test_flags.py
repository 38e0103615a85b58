import math
import random

import pytest

from vtschur import flags as fl
from vtschur.matrices import co, diag, dim_stats, mat, ro, unit


def test_subspace_counts():
    assert len(fl.enum_subspaces(3, 2, 1)) == 4
    assert fl.enum_subspaces(3, 2, 0) == [()]
    assert len(fl.enum_subspaces(5, 3, 1)) == 31
    for p in (3, 5):
        for d in range(4):
            for k in range(d + 1):
                assert len(fl.enum_subspaces(p, d, k)) == fl.gaussian_binomial_count(p, d, k)


def test_subspaces_canonical():
    subs = fl.enum_subspaces(5, 3, 2)
    assert len(set(subs)) == len(subs)
    for s in subs:
        assert fl.rref(s, 5) == s


def test_flag_counts():
    assert len(fl.enum_flags_Y(3, 2)) == 4
    assert len(fl.enum_flags_Y(3, 3)) == 52
    assert len(fl.enum_flags_X(3, 2, 1)) == 1
    assert len(fl.enum_flags_X(3, 1, 2)) == 2


def test_guards():
    with pytest.raises(fl.GuardExceeded):
        fl.enum_flags_Y(11, 2)
    with pytest.raises(ValueError):
        fl.enum_flags_Y(4, 2)
    assert len(fl.enum_flags_Y(11, 2, allow_large=True)) == 12


def test_orbit_matrix_diagonal():
    p = 3
    for V in fl.enum_flags_X(p, 2, 2):
        M = fl.orbit_matrix(V, V, p)
        dims = [len(s) for s in V]
        steps = [dims[0]] + [dims[i] - dims[i - 1] for i in range(1, len(dims))]
        assert M == diag(steps)


def test_orbit_matrix_small_case():
    # n=2, d=1: the pair (full <= full, 0 <= full) sits on the E_12 orbit
    p = 3
    V = (fl.full_space(1), fl.full_space(1))
    W = ((), fl.full_space(1))
    assert fl.orbit_matrix(V, W, p) == unit(2, 1, 2)


def test_orbit_matrix_profiles():
    p = 3
    X = fl.enum_flags_X(p, 2, 2)
    rng = random.Random(5)
    for _ in range(100):
        V = rng.choice(X)
        W = rng.choice(X)
        M = fl.orbit_matrix(V, W, p)
        assert sum(sum(r) for r in M) == 2
        dimsV = [len(s) for s in V]
        dimsW = [len(s) for s in W]
        assert list(ro(M)) == [dimsV[0]] + [dimsV[i] - dimsV[i - 1] for i in range(1, 2)]
        assert list(co(M)) == [dimsW[0]] + [dimsW[i] - dimsW[i - 1] for i in range(1, 2)]


def random_invertible(p, d, rng):
    while True:
        g = [[rng.randrange(p) for _ in range(d)] for _ in range(d)]
        if len(fl.rref(tuple(map(tuple, g)), p)) == d:
            return g


def apply_g(g, flag, p):
    out = []
    for rows in flag:
        moved = tuple(
            tuple(sum(r[k] * g[k][j] for k in range(len(g))) % p for j in range(len(g)))
            for r in rows
        )
        out.append(fl.rref(moved, p))
    return tuple(out)


def test_orbit_matrix_g_invariance():
    p = 3
    d = 2
    X = fl.enum_flags_X(p, d, 2)
    Y = fl.enum_flags_Y(p, d)
    rng = random.Random(17)
    for _ in range(10):
        g = random_invertible(p, d, rng)
        V = rng.choice(X)
        W = rng.choice(X)
        F = rng.choice(Y)
        assert fl.orbit_matrix(V, W, p) == fl.orbit_matrix(apply_g(g, V, p), apply_g(g, W, p), p)
        assert fl.orbit_matrix(V, F, p) == fl.orbit_matrix(apply_g(g, V, p), apply_g(g, F, p), p)


@pytest.mark.parametrize("n,d,p", [(2, 2, 3), (2, 3, 3), (3, 2, 3), (3, 3, 3), (2, 2, 5), (3, 2, 5), (2, 3, 5), (3, 3, 5)])
def test_orbit_type_counts(n, d, p):
    X = fl.enum_flags_X(p, d, n)
    Y = fl.enum_flags_Y(p, d)
    xy_types = {fl.orbit_matrix(V, F, p) for V in X for F in Y}
    assert len(xy_types) == n ** d
    yy_types = {fl.orbit_matrix(F, G, p) for F in Y for G in Y}
    assert len(yy_types) == math.factorial(d)
    for M in yy_types:
        assert set(ro(M)) == {1} and set(co(M)) == {1}


def test_yy_identity():
    p = 3
    F = fl.enum_flags_Y(p, 3)[0]
    assert fl.orbit_matrix(F, F, p) == diag((1, 1, 1))


def test_dim_stats():
    assert dim_stats(diag((1, 2)))[2] == 0
    assert dim_stats(unit(2, 1, 2))[2] == 0
    assert dim_stats(mat([[0, 1], [1, 0]]))[2] == 1
    rng = random.Random(9)
    for _ in range(40):
        n = rng.choice([2, 3])
        M = tuple(tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(n))
        d = sum(sum(r) for r in M)
        stab, orbit, _ = dim_stats(M)
        assert stab + orbit == d * d


def test_convolve_count_examples():
    # unique middle flag: B = E_12, A = diag(0, 1) composes to E_12
    B = unit(2, 1, 2)
    A = diag((0, 1))
    assert fl.convolve_count(B, A, 3, 1, 2) == {B: 1}
    # idempotent diagonals
    D = diag((1, 1))
    assert fl.convolve_count(D, D, 3, 2, 2) == {D: 1}
    # a genuinely quantum count: q + 1 middle lines at q = 3
    B = mat([[1, 1], [0, 0]])
    A = mat([[1, 0], [1, 0]])
    out = fl.convolve_count(B, A, 3, 2, 2)
    assert out == {diag((2, 0)): 4}


def test_convolve_count_incompatible():
    with pytest.raises(ValueError):
        fl.convolve_count(diag((1, 0)), diag((0, 1)), 3, 1, 2)


def test_conv_table_matches_convolve_count():
    p, d, n = 3, 2, 2
    table = fl.conv_table(p, d, n)
    B = mat([[1, 1], [0, 0]])
    A = mat([[1, 0], [1, 0]])
    assert table[(B, A)] == fl.convolve_count(B, A, p, d, n)


def test_oracle_associativity():
    rng = random.Random(31)
    for n, d in [(2, 2), (3, 2), (2, 1), (3, 1)]:
        table = fl.conv_table(3, d, n)
        keys = list(table)
        tried = 0
        trials = 0
        while tried < 20 and trials < 4000:
            trials += 1
            B, A = rng.choice(keys)
            # find C compatible with A on the right
            Cs = [C2 for (A2, C2) in keys if A2 == A]
            if not Cs:
                continue
            C = rng.choice(Cs)
            left = {}
            for M, cnt in table[(B, A)].items():
                for Z, cnt2 in table.get((M, C), {}).items():
                    left[Z] = left.get(Z, 0) + cnt * cnt2
            right = {}
            for M, cnt in table[(A, C)].items():
                for Z, cnt2 in table.get((B, M), {}).items():
                    right[Z] = right.get(Z, 0) + cnt2 * cnt
            assert {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v}
            tried += 1
        assert tried == 20


def test_convolution_report_shape():
    B = unit(2, 1, 2)
    A = diag((0, 1))
    doc = fl.convolution_report(B, A, 3, 1, 2)
    assert doc["n"] == 2 and doc["d"] == 1 and doc["p"] == 3
    assert doc["B"] == [[0, 1], [0, 0]]
    assert doc["counts"] == [{"C": [[0, 1], [0, 0]], "count": 1}]
