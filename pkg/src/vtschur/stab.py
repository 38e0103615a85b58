"""Stabilized multiplication on integer matrices and the windowed completion.

The same closed-form product rules run here on matrices whose diagonal
entries may be negative (off-diagonals never are).  Two independent devices
make the limit computable:

* stabilization_check shifts a pair by p along the diagonal, multiplies in
  the honest finite algebra for several p, and fits one polynomial pattern
  G(v, v', t, t') that reproduces every run under v' = v^{-p}, t' = t^p.
  Binomials contribute denominators that are quantum factorials in v, so the
  observations are cleared by a fixed factorial multiple first; the cleared
  pattern is a genuine Laurent polynomial and the fit is exact linear
  algebra over Q.

* the completion is modelled by truncating diagonal supports to a window
  [-W, W]^n; a relation with f factors is asserted only on matrices whose
  diagonals keep a margin of f - 1 from the boundary, where truncation
  provably cannot lose contributions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import laurent, linalg, schur
from .laurent import ONE, VTPoly, mono
from .matrices import add as mat_add, co, diag, diag_of, is_stab, ro, unit as mat_unit, zero


class FitInconsistent(ArithmeticError):
    """The shifted products do not follow a single substitution pattern."""


# -- shifts ---------------------------------------------------------------------

def shift(A, p, mode="I", m=None):
    """A + p I, A + 2p I, or A + 2p I' with I' missing the (m+1) slot."""
    n = len(A)
    if mode == "I":
        D = diag((p,) * n)
    elif mode == "2I":
        D = diag((2 * p,) * n)
    elif mode == "2I'":
        if m is None:
            raise ValueError("mode 2I' needs the cut index m")
        D = diag(tuple(0 if a == m + 1 else 2 * p for a in range(1, n + 1)))
    else:
        raise ValueError("unknown shift mode %r" % (mode,))
    out = mat_add(A, D)
    if any(x < 0 for x in ro(out)) or any(x < 0 for x in co(out)):
        raise ValueError("shift leaves negative row/column sums: %r" % (out,))
    return out


# -- stabilized products ----------------------------------------------------------

def stab_mult_E(B, x):
    return schur.mult_chevE(B, x, stab=True)


def stab_mult_F(C, x):
    return schur.mult_chevF(C, x, stab=True)


def stab_mul(x, y):
    """Product of limit-algebra elements with Chevalley-shaped left support."""
    return schur.chev_mul(x, y, stab=True)


# -- the weight window -------------------------------------------------------------

@dataclass(frozen=True)
class WeightWindow:
    W: int
    margin: int = 2

    def __post_init__(self):
        if self.W < 1 or self.margin < 0 or self.margin >= self.W:
            raise ValueError("need 1 <= margin < W")

    def lambdas(self, n):
        return itertools.product(range(-self.W, self.W + 1), repeat=n)

    def interior(self, M):
        lo, hi = -self.W + self.margin, self.W - self.margin
        return all(lo <= M[i][i] <= hi for i in range(len(M)))


def completion_element(A0, jvec, window, n=None, restrict=None):
    """Truncated completion element: the weighted sum of {A0 + D_lambda}.

    A0 must have zero diagonal; the weight of lambda is
    v^{sum lambda_k j_k} t^{sum lambda_k |j_k|}.  restrict, when given,
    filters admissible matrices (the primed variant of the limit algebra).
    """
    n = n or len(A0)
    if any(A0[i][i] for i in range(n)):
        raise ValueError("the off-diagonal part must have zero diagonal")
    if not is_stab(A0):
        raise ValueError("off-diagonal entries must be nonnegative")
    out = {}
    for lam in window.lambdas(n):
        M = mat_add(A0, diag(lam))
        if restrict is not None and not restrict(M):
            continue
        va = sum(l * j for l, j in zip(lam, jvec))
        ta = sum(l * abs(j) for l, j in zip(lam, jvec))
        out[M] = mono(va, ta)
    return out


def diagonal_weight(jvec, window, n, restrict=None):
    return completion_element(zero(n), jvec, window, n=n, restrict=restrict)


def e_limit(i, window, n, restrict=None):
    return completion_element(mat_unit(n, i, i + 1), (0,) * n, window, n=n, restrict=restrict)


def f_limit(i, window, n, restrict=None):
    return completion_element(mat_unit(n, i + 1, i), (0,) * n, window, n=n, restrict=restrict)


def interior_part(x, window):
    return {M: c for M, c in x.items() if window.interior(M)}


def window_eq(x, y, window):
    return interior_part(schur.clean(x), window) == interior_part(schur.clean(y), window)


# -- the completion relation suite ---------------------------------------------------

def _ev(n, a, val=1):
    return tuple(val if k == a else 0 for k in range(1, n + 1))


def limit_relation_suite(n, window):
    """The limit-algebra relation suite, compared on window interiors.

    Returns (checks, skipped): checks is a list of (name, ok); skipped counts
    boundary matrices excluded from each comparison.
    """
    checks = []
    skipped = 0
    jvecs = [_ev(n, 1), _ev(n, 2, -1), tuple(range(1, n + 1)), (-1,) * n]

    def cmp(name, lhs, rhs, nfactors):
        nonlocal skipped
        win = WeightWindow(window.W, max(window.margin, nfactors - 1))
        lhs_c, rhs_c = schur.clean(lhs), schur.clean(rhs)
        skipped += sum(1 for M in set(lhs_c) | set(rhs_c) if not win.interior(M))
        checks.append((name, interior_part(lhs_c, win) == interior_part(rhs_c, win)))

    for j1 in jvecs[:2]:
        for j2 in jvecs[2:]:
            z1, z2 = diagonal_weight(j1, window, n), diagonal_weight(j2, window, n)
            cmp("commuting weights %r %r" % (j1, j2), stab_mul(z1, z2), stab_mul(z2, z1), 2)
    for h in range(1, n):
        E = e_limit(h, window, n)
        F = f_limit(h, window, n)
        for jv in jvecs:
            zj = diagonal_weight(jv, window, n)
            lhs = stab_mul(zj, E)
            rhs = schur.elt_scale(stab_mul(E, zj), mono(jv[h - 1] - jv[h], abs(jv[h - 1]) - abs(jv[h])))
            cmp("weight past E_%d %r" % (h, jv), lhs, rhs, 2)
            lhsF = stab_mul(zj, F)
            rhsF = schur.elt_scale(stab_mul(F, zj), mono(jv[h] - jv[h - 1], abs(jv[h]) - abs(jv[h - 1])))
            cmp("weight past F_%d %r" % (h, jv), lhsF, rhsF, 2)
        # t (E F - F E) (v - v^{-1}) = 0(e_h - e_{h+1}) - 0(e_{h+1} - e_h)
        comm = schur.elt_add(stab_mul(E, F), schur.elt_scale(stab_mul(F, E), -ONE))
        lhs = schur.elt_scale(comm, laurent.T * (mono(1, 0) - mono(-1, 0)))
        jplus = tuple(a - b for a, b in zip(_ev(n, h), _ev(n, h + 1)))
        jminus = tuple(-x for x in jplus)
        rhs = schur.elt_add(diagonal_weight(jplus, window, n),
                            schur.elt_scale(diagonal_weight(jminus, window, n), -ONE))
        cmp("cartan commutator h=%d" % h, lhs, rhs, 2)
    vt_mid = mono(1, 1) + mono(-1, 1)
    for i in range(1, n - 1):
        E1, E2 = e_limit(i, window, n), e_limit(i + 1, window, n)
        F1, F2 = f_limit(i, window, n), f_limit(i + 1, window, n)
        s1 = schur.elt_add(
            schur.elt_add(stab_mul(E1, stab_mul(E1, E2)),
                          schur.elt_scale(stab_mul(E1, stab_mul(E2, E1)), -vt_mid)),
            schur.elt_scale(stab_mul(E2, stab_mul(E1, E1)), mono(0, 2)))
        cmp("serre E first i=%d" % i, s1, {}, 3)
        s2 = schur.elt_add(
            schur.elt_add(schur.elt_scale(stab_mul(E2, stab_mul(E2, E1)), mono(0, 2)),
                          schur.elt_scale(stab_mul(E2, stab_mul(E1, E2)), -vt_mid)),
            stab_mul(E1, stab_mul(E2, E2)))
        cmp("serre E second i=%d" % i, s2, {}, 3)
        s3 = schur.elt_add(
            schur.elt_add(stab_mul(F1, stab_mul(F1, F2)),
                          schur.elt_scale(stab_mul(F1, stab_mul(F2, F1)), -(mono(1, -1) + mono(-1, -1)))),
            schur.elt_scale(stab_mul(F2, stab_mul(F1, F1)), mono(0, -2)))
        cmp("serre F first i=%d" % i, s3, {}, 3)
        s4 = schur.elt_add(
            schur.elt_add(schur.elt_scale(stab_mul(F2, stab_mul(F2, F1)), mono(0, -2)),
                          schur.elt_scale(stab_mul(F2, stab_mul(F1, F2)), -(mono(1, -1) + mono(-1, -1)))),
            stab_mul(F1, stab_mul(F2, F2)))
        cmp("serre F second i=%d" % i, s4, {}, 3)
    return checks, skipped


def generator_transport_suite(n, window):
    """The generator substitution E -> tE, F -> F, A_a -> 0(e_a), B_a -> 0(-e_a)
    carries the presented relations into window identities.

    The inverse relations are excluded: 0(e_a) 0(-e_a) is a genuine t-series,
    not the unit, because the completion weights carry |j| exponents.
    """
    checks = []
    from . import uvt

    def img(sym):
        if sym[0] == "E":
            return schur.elt_scale(e_limit(sym[1], window, n), laurent.T)
        if sym[0] == "F":
            return f_limit(sym[1], window, n)
        sgn = sym[2] if sym[0] == "A" else -sym[2]
        return diagonal_weight(_ev(n, sym[1], sgn), window, n)

    def prod(syms):
        acc = None
        for s in reversed(syms):
            acc = img(s) if acc is None else stab_mul(img(s), acc)
        return acc

    for i in range(1, n + 1):
        for j in range(1, n):
            br = uvt.pairing(n, i, j)
            lhs = prod((("A", i, 1), ("E", j)))
            rhs = schur.elt_scale(prod((("E", j), ("A", i, 1))), mono(br, br))
            checks.append(("R2 transport A%d E%d" % (i, j), window_eq(lhs, rhs, window)))
            lhsB = prod((("B", i, 1), ("E", j)))
            rhsB = schur.elt_scale(prod((("E", j), ("B", i, 1))), mono(-br, br))
            checks.append(("R2 transport B%d E%d" % (i, j), window_eq(lhsB, rhsB, window)))
    for i in range(1, n):
        for j in range(1, n):
            comm = schur.elt_add(prod((("E", i), ("F", j))),
                                 schur.elt_scale(prod((("F", j), ("E", i))), -ONE))
            lhs = schur.elt_scale(comm, mono(1, 0) - mono(-1, 0))
            rhs = {}
            if i == j:
                rhs = schur.elt_add(prod((("A", i, 1), ("B", i + 1, 1))),
                                    schur.elt_scale(prod((("B", i, 1), ("A", i + 1, 1))), -ONE))
            win3 = WeightWindow(window.W, max(window.margin, 2))
            checks.append(("R3 transport %d,%d" % (i, j),
                           interior_part(schur.clean(lhs), win3) == interior_part(schur.clean(rhs), win3)))
    vt_mid = mono(1, 1) + mono(-1, 1)
    for i in range(1, n - 1):
        lhs = schur.elt_add(
            schur.elt_add(prod((("E", i), ("E", i), ("E", i + 1))),
                          schur.elt_scale(prod((("E", i), ("E", i + 1), ("E", i))), -vt_mid)),
            schur.elt_scale(prod((("E", i + 1), ("E", i), ("E", i))), mono(0, 2)))
        win4 = WeightWindow(window.W, max(window.margin, 2))
        checks.append(("R4 transport i=%d" % i,
                       interior_part(schur.clean(lhs), win4) == {}))
    return checks


# -- the stabilization fit --------------------------------------------------------------

def suggested_p0(A1, A2):
    shape = schur.chev_shape(A1)
    r = shape[2] if shape else 0
    return max(abs(A1[i][i]) for i in range(len(A1))) + max(
        abs(A2[i][i]) for i in range(len(A2))) + r


def _shifted_product(A1, A2, p):
    B = shift(A1, p)
    A = shift(A2, p)
    prod = schur.lmul_braced(B, {A: ONE})
    n = len(A1)
    out = {}
    for M, c in prod.items():
        z = mat_add(M, diag((-p,) * n))
        out[z] = c
    return out


def stabilization_check(A1, A2, p_list=(3, 4, 5)):
    """Fit one G(v, v', t, t') pattern to the shifted products.

    Returns {z: fitted pattern} with the pattern as {(a, b, k, l): Fraction}
    meaning g v^a t^b v'^k t'^l, after clearing by the quantum-factorial
    denominator; raises FitInconsistent when no bounded pattern exists.
    The v' = t' = 1 specialization is checked against the limit product.
    """
    if len(p_list) < 3:
        raise ValueError("need at least three shift values")
    shape = schur.chev_shape(A1)
    if shape is None:
        raise ValueError("the left factor must be Chevalley-shaped")
    r = shape[2]
    p0 = suggested_p0(A1, A2)
    if min(p_list) < p0:
        raise ValueError("shift values must be at least the heuristic p0 = %d" % p0)
    n = len(A1)
    # clearing multiple: a shifted binomial is a product of r factors
    # ((p-dependent quantum integer) / (i)_v-bar), and each p-dependent
    # quantum integer is (v'^2 v^{-2c} - 1)/(v^{-2} - 1); multiplying by
    # this makes the observed coefficients honest Laurent polynomials
    clear = (mono(-2, 0) - 1) ** r
    for i in range(1, r + 1):
        clear = clear * laurent.bar(laurent.qint(i)) ** n
    runs = {p: _shifted_product(A1, A2, p) for p in p_list}
    support = {z for run in runs.values() for z in run}
    for run in runs.values():
        if set(run) != support:
            raise FitInconsistent("output support varies with the shift")
    limit = stab_mul({A1: ONE}, {A2: ONE})
    bound = 2 * r
    out = {}
    p1 = min(p_list)
    for z in sorted(support):
        obs = {p: clear * runs[p][z] for p in p_list}
        cands = set()
        for (a, b) in obs[p1].c:
            for k in range(bound + 1):
                for l in range(bound + 1):
                    cands.add((a + p1 * k, b - p1 * l, k, l))
        cands = sorted(cands)
        # equations: for each p, predicted and observed supports must agree
        keys = []
        for p in p_list:
            mons = set(obs[p].c)
            mons.update((a - p * k, b + p * l) for (a, b, k, l) in cands)
            keys.extend((p, mon) for mon in sorted(mons))
        rows = []
        rhs = []
        for p, mon in keys:
            row = [Fraction(1) if (a - p * k, b + p * l) == mon else Fraction(0)
                   for (a, b, k, l) in cands]
            rows.append(row)
            rhs.append(Fraction(obs[p].coeff(*mon)))
        sol = linalg.frac_solve(rows, rhs)
        if sol is None:
            raise FitInconsistent("no bounded pattern reproduces the runs for %r" % (z,))
        pattern = {c: g for c, g in zip(cands, sol) if g}
        # v' = t' = 1 specialization must match the limit-algebra product
        spec = VTPoly({})
        for (a, b, k, l), g in pattern.items():
            spec = spec + mono(a, b, 1) * (int(g) if g.denominator == 1 else g)
        target = clear * limit.get(z, laurent.ZERO)
        if spec != target:
            raise FitInconsistent("v'=t'=1 specialization disagrees with the limit for %r" % (z,))
        out[z] = pattern
    if set(limit) - support:
        raise FitInconsistent("limit product has terms the runs never show")
    return out
