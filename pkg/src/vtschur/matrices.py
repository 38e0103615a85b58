"""Integer matrices indexing orbits: row/column profiles and dimension counts.

Matrices are plain tuples of tuples of ints, so they can key dicts directly.
The same helpers serve the square n-by-n case, the rectangular n-by-d case,
and the d-by-d permutation case.
"""

from __future__ import annotations

import itertools


def ro(M):
    """Row-sum vector."""
    return tuple(sum(row) for row in M)


def co(M):
    """Column-sum vector."""
    return tuple(sum(col) for col in zip(*M))


def mat(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


def zero(nrows, ncols=None):
    ncols = nrows if ncols is None else ncols
    return tuple((0,) * ncols for _ in range(nrows))


def unit(nrows, i, j, val=1, ncols=None):
    """Matrix with a single entry val at (i, j); 1-based indices."""
    ncols = nrows if ncols is None else ncols
    return tuple(
        tuple(val if (r, c) == (i - 1, j - 1) else 0 for c in range(ncols))
        for r in range(nrows)
    )


def diag(vec):
    n = len(vec)
    return tuple(tuple(vec[r] if r == c else 0 for c in range(n)) for r in range(n))


def diag_of(M):
    return tuple(M[i][i] for i in range(len(M)))


def add(M, N):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(M, N))


def scale(M, k):
    return tuple(tuple(k * a for a in row) for row in M)


def entries_sum(M):
    return sum(sum(row) for row in M)


def is_theta(M, d=None):
    """Natural matrix whose entries sum to d (any d when omitted)."""
    if any(x < 0 for row in M for x in row):
        return False
    return d is None or entries_sum(M) == d


def is_stab(M):
    """Integer matrix with nonnegative off-diagonal entries."""
    return all(x >= 0 for i, row in enumerate(M) for j, x in enumerate(row) if i != j)


def theta_matrices(n, d):
    """All n-by-n natural matrices summing to d, in lexicographic order."""
    cells = n * n
    out = []

    def fill(idx, remaining, flat):
        if idx == cells - 1:
            out.append(flat + [remaining])
            return
        for x in range(remaining + 1):
            fill(idx + 1, remaining - x, flat + [x])

    fill(0, d, [])
    return [tuple(tuple(f[i * n + j] for j in range(n)) for i in range(n)) for f in out]


def compositions(n, d):
    """All vectors in N^n summing to d."""
    out = []
    for cuts in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(d + n - 2 - prev)
        out.append(tuple(parts))
    return out


def dim_stats(M):
    """(stabilizer dim, orbit dim, d(M) - r(M)) from the entry-pair counts.

    stabilizer = sum over i>=k, j>=l of m_ij m_kl; orbit is the complement in
    (sum of entries)^2; the last value counts pairs with i>=k and j<l.
    """
    cells = [(i, j, x) for i, row in enumerate(M) for j, x in enumerate(row) if x]
    stab = orbit = dmr = 0
    for i, j, x in cells:
        for k, l, y in cells:
            if i >= k and j >= l:
                stab += x * y
            else:
                orbit += x * y
            if i >= k and j < l:
                dmr += x * y
    return stab, orbit, dmr


def dminusr(M):
    return dim_stats(M)[2]
