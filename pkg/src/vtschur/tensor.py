"""Tensor space with the left quantum-algebra action and right Hecke action.

Basis vectors are sequences r = (r_1, ..., r_d) with entries in [1, n];
elements are dicts {seq: VTPoly}.  Operators (LinOp) are column-sparse dicts
{basis seq: element}, the common arena where every relation of the presented
algebras is verified exactly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import laurent, linalg
from .laurent import VTPoly, mono

# -- elements ----------------------------------------------------------------

def all_seqs(n, d):
    return [tuple(s) for s in itertools.product(range(1, n + 1), repeat=d)]


def clean(x):
    return {r: c for r, c in x.items() if c}


def add(x, y):
    out = dict(x)
    for r, c in y.items():
        s = out.get(r, laurent.ZERO) + c
        if s:
            out[r] = s
        else:
            out.pop(r, None)
    return out


def scale(x, poly):
    if not poly:
        return {}
    return {r: c * poly for r, c in x.items()}


# -- the defining actions ------------------------------------------------------

def act_E(i, x, n):
    """Lower one entry i+1 to i; the weight counts matches to the right."""
    out = {}
    for r, c in x.items():
        for p, rp in enumerate(r):
            if rp != i + 1:
                continue
            va = sum((r[j] == i) - (r[j] == i + 1) for j in range(p + 1, len(r)))
            ta = 1 + sum((r[j] == i) + (r[j] == i + 1) for j in range(p + 1, len(r)))
            tgt = r[:p] + (i,) + r[p + 1:]
            out[tgt] = out.get(tgt, laurent.ZERO) + c * mono(va, ta)
    return clean(out)


def act_F(i, x, n):
    """Raise one entry i to i+1 (weights over the positions to the left)."""
    out = {}
    for r, c in x.items():
        for p, rp in enumerate(r):
            if rp != i:
                continue
            va = sum((r[j] == i + 1) - (r[j] == i) for j in range(p))
            ta = sum((r[j] == i) + (r[j] == i + 1) for j in range(p))
            tgt = r[:p] + (i + 1,) + r[p + 1:]
            out[tgt] = out.get(tgt, laurent.ZERO) + c * mono(va, ta)
    return clean(out)


def act_A(a, sign, x, n):
    out = {}
    for r, c in x.items():
        k = sign * sum(rj == a for rj in r)
        out[r] = c * mono(k, k)
    return clean(out)


def act_B(a, sign, x, n):
    out = {}
    for r, c in x.items():
        k = sum(rj == a for rj in r)
        out[r] = c * mono(-sign * k, sign * k)
    return clean(out)


def act_T(j, x):
    """Right Hecke action of T_j (1-based j in [1, d-1])."""
    out = {}
    for r, c in x.items():
        a, b = r[j - 1], r[j]
        swapped = r[:j - 1] + (b, a) + r[j + 1:]
        if a < b:
            out[swapped] = out.get(swapped, laurent.ZERO) + c
        elif a == b:
            out[r] = out.get(r, laurent.ZERO) + c * mono(1, 1)
        else:
            out[r] = out.get(r, laurent.ZERO) + c * (mono(1, 1) - mono(-1, 1))
            out[swapped] = out.get(swapped, laurent.ZERO) + c * mono(0, 2)
    return clean(out)


# -- generator symbols ---------------------------------------------------------

def gens(n):
    out = [("E", i) for i in range(1, n)] + [("F", i) for i in range(1, n)]
    out += [("A", a, s) for a in range(1, n + 1) for s in (1, -1)]
    out += [("B", a, s) for a in range(1, n + 1) for s in (1, -1)]
    return out


def apply_sym(sym, x, n):
    kind = sym[0]
    if kind == "E":
        return act_E(sym[1], x, n)
    if kind == "F":
        return act_F(sym[1], x, n)
    if kind == "A":
        return act_A(sym[1], sym[2], x, n)
    if kind == "B":
        return act_B(sym[1], sym[2], x, n)
    raise ValueError("unknown generator symbol %r" % (sym,))


def apply_word(word, x, n):
    """Apply the product word[0] word[1] ... (rightmost factor acts first)."""
    for sym in reversed(word):
        x = apply_sym(sym, x, n)
    return x


# -- operators -----------------------------------------------------------------

def op_zero():
    return {}


def op_identity(n, d):
    return {r: {r: laurent.ONE} for r in all_seqs(n, d)}


def op_clean(P):
    return {r: col for r, col in ((r, clean(col)) for r, col in P.items()) if col}


def op_eq(P, Q):
    return op_clean(P) == op_clean(Q)


def op_add(P, Q):
    out = {r: dict(col) for r, col in P.items()}
    for r, col in Q.items():
        out[r] = add(out.get(r, {}), col)
    return op_clean(out)


def op_scale(P, poly):
    return op_clean({r: scale(col, poly) for r, col in P.items()})


def op_sub(P, Q):
    return op_add(P, op_scale(Q, -laurent.ONE))


def op_apply(P, x):
    out = {}
    for r, c in x.items():
        out = add(out, scale(P.get(r, {}), c))
    return out


def op_compose(P, Q):
    """P after Q (the operator of the product P Q)."""
    return op_clean({r: op_apply(P, col) for r, col in Q.items()})


@lru_cache(maxsize=None)
def op_sym(sym, n, d):
    return op_clean({r: apply_sym(sym, {r: laurent.ONE}, n) for r in all_seqs(n, d)})


def op_word(word, n, d):
    P = op_identity(n, d)
    for sym in reversed(word):
        P = op_compose(op_sym(sym, n, d), P)
    return P


def op_combo(combo, n, d):
    """Operator of a linear combination [(poly, word), ...]."""
    out = {}
    for poly, word in combo:
        out = op_add(out, op_scale(op_word(word, n, d), poly))
    return out


@lru_cache(maxsize=None)
def op_T(j, n, d):
    return op_clean({r: act_T(j, {r: laurent.ONE}) for r in all_seqs(n, d)})


def op_Tword(word, n, d):
    """Right action operator of T_{word}: earlier letters act first."""
    P = op_identity(n, d)
    for j in word:
        P = op_compose(op_T(j, n, d), P)
    return P


# -- duality checks --------------------------------------------------------------

def commute_check(n, d, allow_large=False):
    """The two actions commute on every basis vector: list of (label, ok)."""
    if (n > 4 or d > 3) and not allow_large:
        from .flags import GuardExceeded

        raise GuardExceeded("commutation guard n<=4, d<=3; pass allow_large=True")
    out = []
    for g in gens(n):
        for j in range(1, d):
            ok = True
            for r in all_seqs(n, d):
                x = {r: laurent.ONE}
                lhs = apply_sym(g, act_T(j, x), n)
                rhs = act_T(j, apply_sym(g, x, n))
                if lhs != rhs:
                    ok = False
                    break
            out.append(("%r with T_%d" % (g, j), ok))
    return out


def specialize_op(P, v0, t0, n, d):
    """Dense Fraction matrix of an operator (rows/cols in all_seqs order)."""
    seqs = all_seqs(n, d)
    idx = {r: i for i, r in enumerate(seqs)}
    N = len(seqs)
    M = [[Fraction(0)] * N for _ in range(N)]
    for r, col in P.items():
        j = idx[r]
        for s, c in col.items():
            M[idx[s]][j] = laurent.specialize(c, v0, t0)
    return M


def _u_side_ops(n, d, v0, t0):
    return [specialize_op(op_sym(g, n, d), v0, t0, n, d) for g in gens(n)]


def _hecke_side_ops(n, d, v0, t0):
    return [specialize_op(op_T(j, n, d), v0, t0, n, d) for j in range(1, d)]


def _mat_mul(A, B):
    N = len(A)
    out = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        Ai = A[i]
        for k in range(N):
            if Ai[k]:
                Bk = B[k]
                a = Ai[k]
                row = out[i]
                for j in range(N):
                    if Bk[j]:
                        row[j] += a * Bk[j]
    return out


def _span_closure(seed_mats, multipliers, max_rounds):
    """Dimension of the span of words, by closing the span under left
    multiplication; returns (rank accumulator, stabilized flag)."""
    acc = linalg.IncrementalRank()
    frontier = []
    for M in seed_mats:
        if acc.add([x for row in M for x in row]):
            frontier.append(M)
    rounds = 0
    while frontier and rounds < max_rounds:
        rounds += 1
        new = []
        for G in multipliers:
            for M in frontier:
                P = _mat_mul(G, M)
                if acc.add([x for row in P for x in row]):
                    new.append(P)
        frontier = new
    return acc, not frontier


def centralizer_dim(side, n, d, v0=2, t0=3):
    """Exact dimension of the commutant of one of the two actions.

    side='hecke' cuts out the commutant of the right Hecke operators (the
    image of the flag algebra when n >= d); side='uvt' the commutant of all
    quantum-algebra generators.  Degenerate specializations are rejected.

    Small cases run the full rational nullspace; for large ones the value is
    pinned by an explicit commuting family (lower bound, exactness argument
    in linalg) against the modular nullity of the constraints (upper bound).
    """
    v0, t0 = Fraction(v0), Fraction(t0)
    if v0 * t0 in (1, -1) or v0 == 0 or t0 == 0:
        raise ValueError("degenerate specialization (v0, t0) = (%s, %s)" % (v0, t0))
    if d == 0:
        return 1
    if side == "hecke":
        mats = _hecke_side_ops(n, d, v0, t0)
        if not mats:
            return len(all_seqs(n, d)) ** 2
    elif side == "uvt":
        mats = _u_side_ops(n, d, v0, t0)
    else:
        raise ValueError("side must be 'hecke' or 'uvt'")
    N = len(all_seqs(n, d))
    if N <= 9:
        return linalg.commutant_dim_exact(mats)
    rows = linalg.commutant_constraint_rows(mats)
    for p in linalg.CERT_PRIMES:
        upper = N * N - linalg.modular_rank(rows, N * N, p)
        if side == "hecke":
            gens_mod = [linalg.mod_mat(M, p) for M in _u_side_ops(n, d, v0, t0)]
            ident = np.eye(N, dtype=np.int64)
            lower, _ = linalg.mod_span_closure([ident], gens_mod, p, max_rounds=8 * d)
        else:
            fam = [specialize_op(op_Tword(w, n, d), v0, t0, n, d) for w in _all_hecke_words(d)]
            fam_rows = [[x for row in M for x in row] for M in fam]
            lower = linalg.modular_rank(
                [linalg.scale_to_int({i: Fraction(x) for i, x in enumerate(r) if x}) for r in fam_rows],
                N * N, p)
        if lower == upper:
            return lower
    raise ArithmeticError("commutant bounds disagree: lower %d vs upper %d" % (lower, upper))


def _all_hecke_words(d):
    from . import hecke

    return [[i + 1 for i in hecke.reduced_word(w)] for w in hecke.all_perms(d)]


def surjectivity_rank(n, d, v0=2, t0=3, cap=None):
    """Rank of the span of generator-word operator images.

    The word-length cap starts at 2d and doubles at most twice; a failure to
    stabilize raises.  Small cases run exact Fraction closure; large ones are
    certified by a modular closure (lower bound) meeting the Hecke-commutant
    dimension (upper bound, since the image commutes with the Hecke action).
    """
    if d == 0:
        return 1
    v0, t0 = Fraction(v0), Fraction(t0)
    N = len(all_seqs(n, d))
    cap = cap or 2 * d
    if N <= 9:
        gens_mats = _u_side_ops(n, d, v0, t0)
        ident = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
        for _ in range(3):
            acc, stabilized = _span_closure([ident], gens_mats, max_rounds=cap)
            if stabilized:
                return acc.rank
            cap *= 2
        raise ArithmeticError("word-image span did not stabilize below the cap")

    upper = centralizer_dim("hecke", n, d, v0, t0)
    p = linalg.CERT_PRIMES[0]
    gens_mod = [linalg.mod_mat(M, p) for M in _u_side_ops(n, d, v0, t0)]
    ident = np.eye(N, dtype=np.int64)
    for _ in range(3):
        lower, stabilized = linalg.mod_span_closure([ident], gens_mod, p, max_rounds=cap)
        if stabilized or lower == upper:
            if lower != upper:
                raise ArithmeticError("span rank %d below commutant dimension %d" % (lower, upper))
            return lower
        cap *= 2
    raise ArithmeticError("word-image span did not stabilize below the cap")


# -- coproduct ------------------------------------------------------------------

def coproduct_legs(sym):
    """Legs of the coproduct of a generator as pairs of generator words."""
    kind = sym[0]
    if kind == "E":
        i = sym[1]
        return [([sym], [("A", i, 1), ("B", i + 1, 1)]), ([], [sym])]
    if kind == "F":
        i = sym[1]
        return [([sym], []), ([("B", i, 1), ("A", i + 1, 1)], [sym])]
    return [([sym], [sym])]


def coproduct_word(word):
    """Multiplicative extension of the legs to a word."""
    legs = [([], [])]
    for sym in word:
        legs = [
            (l1 + a, r1 + b)
            for l1, r1 in legs
            for a, b in coproduct_legs(sym)
        ]
    return legs


def tensor_word_op(left_word, right_word, n, d1, d2):
    """Operator of (left tensor right) on V^{d1} x V^{d2} under concatenation."""
    out = {}
    for r in all_seqs(n, d1 + d2):
        x1 = apply_word(left_word, {r[:d1]: laurent.ONE}, n)
        x2 = apply_word(right_word, {r[d1:]: laurent.ONE}, n)
        col = {}
        for s1, c1 in x1.items():
            for s2, c2 in x2.items():
                col[s1 + s2] = c1 * c2
        if col:
            out[r] = col
    return op_clean(out)


def coproduct_compat(n, d1, d2):
    """Action on V^{d1+d2} equals the coproduct legs acting on the factors."""
    out = []
    d = d1 + d2
    for g in gens(n):
        full = op_sym(g, n, d)
        split = {}
        for lw, rw in coproduct_legs(g):
            split = op_add(split, tensor_word_op(lw, rw, n, d1, d2))
        out.append(("%r on %d+%d" % (g, d1, d2), op_eq(full, split)))
    return out
