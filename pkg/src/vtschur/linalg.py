"""Exact rational and modular linear algebra at desk scale.

Rational ranks and nullspaces run Fraction-based Gaussian elimination, which
is exact but only viable for a few hundred unknowns.  Larger commutant
computations are certified by a two-sided sandwich instead:

* a family of explicit elements known (symbolically) to lie in the commutant
  gives a lower bound through its rank, and ranks can only drop under
  reduction mod p, so a modular rank of that family is already a lower bound
  for its rational rank;
* the nullity of the integer constraint system can only grow under reduction
  mod p, so a modular nullity is an upper bound for the rational nullity.

When the two bounds meet, the dimension is pinned exactly.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

CERT_PRIMES = (2000003, 2000029)


def frac_rank(rows):
    """Rank of a list of rows (any iterables of Fractions/ints)."""
    basis = []
    for row in rows:
        row = _reduce_against(list(row), basis)
        if any(row):
            basis.append(_normalize(row))
    return len(basis)


class IncrementalRank:
    """Row-echelon accumulator over Q; add rows one by one."""

    def __init__(self):
        self.basis = []  # list of (pivot index, row)

    def add(self, row):
        """Returns True if the row enlarged the span."""
        row = _reduce_against(list(row), self.basis)
        if any(row):
            self.basis.append(_normalize(row))
            return True
        return False

    @property
    def rank(self):
        return len(self.basis)


def _normalize(row):
    piv = next(i for i, x in enumerate(row) if x)
    inv = Fraction(1, 1) / row[piv]
    return (piv, [x * inv for x in row])


def _reduce_against(row, basis):
    for piv, brow in basis:
        if row[piv]:
            f = row[piv]
            row = [x - f * y for x, y in zip(row, brow)]
    return row


def frac_solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly; returns x or None if inconsistent.

    matrix is a list of rows; the system may be overdetermined.  When the
    solution is not unique an arbitrary member of the affine space is
    returned (free variables set to zero).
    """
    m = [list(row) + [b] for row, b in zip(matrix, rhs)]
    nrows = len(m)
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1, 1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x


def modular_rank(rows, ncols, p):
    """Rank mod p of sparse rows given as {col: int} dicts (or lists)."""
    dense = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        if isinstance(row, dict):
            for c, x in row.items():
                dense[i, c] = x % p
        else:
            dense[i] = [x % p for x in row]
    return _mod_rref_rank(dense, p)


def _mod_rref_rank(m, p):
    m = m % p
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        block = m[r:, c]
        nz = np.nonzero(block)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzrows = np.nonzero(col)[0]
        if nzrows.size:
            m[nzrows] = (m[nzrows] - np.outer(col[nzrows], m[r])) % p
        r += 1
    return r


class ModIncrementalRank:
    """Row-echelon accumulator over F_p for numpy int64 vectors."""

    def __init__(self, ncols, p):
        self.p = p
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    def add(self, vec):
        p = self.p
        v = vec % p
        for piv, row in zip(self.pivots, self.rows):
            f = int(v[piv])
            if f:
                v = (v - f * row) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        inv = pow(int(v[piv]), p - 2, p)
        v = (v * inv) % p
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    @property
    def rank(self):
        return len(self.rows)


def mod_mat(M, p):
    """Integerize (clear denominators) and reduce a Fraction matrix mod p."""
    denom = 1
    for row in M:
        for x in row:
            f = Fraction(x)
            denom = denom * f.denominator // _gcd(denom, f.denominator)
    if denom % p == 0:
        raise ArithmeticError("denominator divisible by the working prime")
    out = np.zeros((len(M), len(M[0])), dtype=np.int64)
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            f = Fraction(x) * denom
            out[i, j] = int(f) % p
    return out


def mod_span_closure(seeds, multipliers, p, max_rounds):
    """F_p-dimension of the span of words, closing under left multiplication.

    All inputs are numpy int64 matrices already reduced mod p.  Returns
    (rank, stabilized); the rank of any set of reduced integer matrices is a
    lower bound for the rational rank of the unreduced ones.
    """
    acc = ModIncrementalRank(seeds[0].size, p)
    frontier = [M for M in seeds if acc.add(M.reshape(-1))]
    rounds = 0
    while frontier and rounds < max_rounds:
        rounds += 1
        new = []
        for G in multipliers:
            for M in frontier:
                P = (G @ M) % p
                if acc.add(P.reshape(-1)):
                    new.append(P)
        frontier = new
    return acc.rank, not frontier


def commutant_constraint_rows(mats, as_int=True):
    """Sylvester rows for {X : X M = M X for all M}, unknown X flattened row-major.

    Each matrix M is a list of lists of Fractions; rows are emitted as sparse
    {flat index: value} dicts.  With as_int the rows are scaled to integers
    (scaling rows never changes the solution space).
    """
    rows = []
    for M in mats:
        N = len(M)
        for i in range(N):
            for j in range(N):
                row = {}
                for k in range(N):
                    if M[k][j]:
                        row[i * N + k] = row.get(i * N + k, Fraction(0)) + M[k][j]
                    if M[i][k]:
                        row[k * N + j] = row.get(k * N + j, Fraction(0)) - M[i][k]
                row = {c: x for c, x in row.items() if x}
                if row:
                    rows.append(scale_to_int(row) if as_int else row)
    return rows


def scale_to_int(row):
    denom = 1
    for x in row.values():
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    return {c: int(x * denom) for c, x in row.items()}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def commutant_dim_exact(mats):
    """Exact commutant dimension over Q by Fraction elimination (small N)."""
    N = len(mats[0])
    rows = commutant_constraint_rows(mats, as_int=False)
    dense = []
    for row in rows:
        r = [Fraction(0)] * (N * N)
        for c, x in row.items():
            r[c] = x
        dense.append(r)
    return N * N - frac_rank(dense)
